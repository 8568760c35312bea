// arcsys: enumerate, classify, verify and render arc systems on the
// four-punctured sphere.
//
// Exit codes: 0 success, 1 check failure, 2 resource limit, 3 usage or I/O.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "arcsys/classification.hpp"
#include "arcsys/enumeration.hpp"
#include "arcsys/error.hpp"
#include "arcsys/intersection.hpp"
#include "arcsys/records.hpp"
#include "arcsys/render.hpp"
#include "arcsys/verification.hpp"

namespace {

constexpr int kExitCheck = 1;
constexpr int kExitResource = 2;
constexpr int kExitUsage = 3;

using namespace arcsys;

std::vector<std::pair<ArcSystem, std::string>> load_reference_labels(const std::string& path) {
  std::vector<std::pair<ArcSystem, std::string>> out;
  if (path.empty()) return out;
  for (auto& r : systems_from_json(read_text_file(path))) {
    if (!r.label.empty()) out.emplace_back(std::move(r.system), std::move(r.label));
  }
  return out;
}

int cmd_enumerate(int k, int bound, int check_bound, std::uint64_t budget, const std::string& out) {
  SearchResult r = find_systems(k, bound, check_bound, budget);
  std::vector<SystemRecord> records;
  records.reserve(r.systems.size());
  for (std::size_t i = 0; i < r.systems.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "k%d-%05zu", k, i + 1);
    records.push_back({name, r.systems[i], {}, {}});
  }
  write_text_file_atomic(out, systems_to_json(records));
  std::cout << r.systems.size() << " systems (k=" << k << ", n=" << bound << ", n'=" << check_bound << ", "
            << r.unsaturated << " maximal cliques extended within n')\n";
  return 0;
}

int cmd_classify(const std::string& in, const std::string& out, const std::string& refs) {
  auto records = systems_from_json(read_text_file(in));
  std::vector<ArcSystem> systems;
  int k = 0;
  for (const auto& r : records) {
    if (!systems.empty() && r.system.k() != k) throw SchemaError("input mixes k=0 and k=1 systems");
    k = r.system.k();
    systems.push_back(r.system);
  }
  auto classes = classify(systems);
  if (k == 1) match_labels(classes);
  match_reference_labels(classes, load_reference_labels(refs));
  if (!out.empty()) write_text_file_atomic(out, orbit_report_to_json(k, systems.size(), classes));
  std::cout << classes.size() << " classes\n";
  for (const auto& c : classes) {
    std::cout << "  " << (c.label.empty() ? "-" : c.label) << "  members=" << c.members << "  "
              << to_string(c.fingerprint) << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& out, const std::string& refs, bool fault) {
  testing::set_closed_form_fault(fault);
  VerificationOptions opt;
  opt.reference_path = refs;
  opt.on_check = [](const CheckEntry& c) {
    std::cout << '[' << status_name(c.status) << "] ";
    if (c.criterion > 0) std::cout << c.criterion << ' ';
    std::cout << c.id << ": " << c.details << std::endl;
  };
  VerificationReport rep = run_verification(opt);
  if (!out.empty()) write_text_file_atomic(out, verification_report_to_json(rep));
  std::cout << (rep.passed() ? "overall: pass" : "overall: FAIL") << '\n';
  return rep.passed() ? 0 : kExitCheck;
}

int cmd_render(const std::string& in, const std::string& out, const std::string& view) {
  std::vector<RenderItem> items;
  for (auto& r : systems_from_json(read_text_file(in))) {
    std::string title = r.name;
    if (!r.label.empty()) title += title.empty() ? r.label : " " + r.label;
    items.push_back({title, std::move(r.system)});
  }
  write_text_file_atomic(out, render_svg(items, view == "disk" ? View::disk : View::pillowcase));
  std::cout << "rendered " << items.size() << " systems to " << out << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arc systems on the four-punctured sphere"};
  app.require_subcommand(1);

  int k = 1, bound = 6, check_bound = 12;
  std::uint64_t budget = CliqueOptions{}.node_budget;
  std::string out, in, view = "pillowcase";
  std::string refs = ARCSYS_DEFAULT_REFERENCES;
  bool fault = false;

  auto* en = app.add_subcommand("enumerate", "Find saturated k-systems by clique search");
  en->add_option("--k", k, "Intersection bound k")->check(CLI::IsMember({0, 1}));
  en->add_option("--bound", bound, "Universe complexity bound n")->check(CLI::Range(1, 40));
  en->add_option("--check-bound", check_bound, "Saturation check bound n'")->check(CLI::Range(1, 60));
  en->add_option("--node-budget", budget, "Clique search node budget");
  en->add_option("--out", out, "Output JSON file")->required();

  auto* cl = app.add_subcommand("classify", "Group systems into orbit classes");
  cl->add_option("input", in, "Systems JSON file")->required();
  cl->add_option("--out", out, "Orbit report JSON file");
  cl->add_option("--references", refs, "Labelled reference systems");

  auto* ve = app.add_subcommand("verify", "Run the acceptance suite");
  ve->add_option("--out", out, "Report JSON file");
  ve->add_option("--references", refs, "Labelled reference systems");
  ve->add_flag("--inject-fault", fault, "Corrupt the closed-form intersection count")->group("");

  auto* re = app.add_subcommand("render", "Draw systems as SVG");
  re->add_option("input", in, "Systems JSON file")->required();
  re->add_option("--out", out, "Output SVG file")->required();
  re->add_option("--view", view, "pillowcase or disk")->check(CLI::IsMember({"pillowcase", "disk"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*en) {
      if (check_bound < bound) throw DomainError("--check-bound must be at least --bound");
      return cmd_enumerate(k, bound, check_bound, budget, out);
    }
    if (*cl) return cmd_classify(in, out, refs);
    if (*ve) return cmd_verify(out, refs, fault);
    if (*re) return cmd_render(in, out, view);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

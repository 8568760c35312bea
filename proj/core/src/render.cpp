#include "arcsys/render.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <algorithm>
#include <sstream>

#include "arcsys/intersection.hpp"

namespace arcsys {

namespace {

using cd = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
                                    "#8c564b", "#e377c2", "#bcbd22", "#7f7f7f", "#393b79", "#637939"};

struct Pt {
  double x;
  double y;
};

// Sampled lift in the plane (torus coordinates, punctures at half-lattice).
std::vector<std::vector<Pt>> lift_paths(const ArcClass& x) {
  HalfPoint h = lattice_point(x.first);
  Pt o{h.x2 * 0.5, h.y2 * 0.5};
  double u = static_cast<double>(x.vec.u), v = static_cast<double>(x.vec.v);
  double len = std::hypot(u, v);
  auto sample = [&](const std::vector<Pt>& corners) {
    std::vector<Pt> out;
    for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
      Pt p = corners[i], q = corners[i + 1];
      int steps = std::max(4, static_cast<int>(std::hypot(q.x - p.x, q.y - p.y) * 400));
      for (int s = 0; s < steps; ++s) {
        double t = static_cast<double>(s) / steps;
        out.push_back({p.x + (q.x - p.x) * t, p.y + (q.y - p.y) * t});
      }
    }
    out.push_back(corners.back());
    return out;
  };
  if (!x.is_loop()) return {sample({o, {o.x + u / 2, o.y + v / 2}})};
  double eps = 0.03 / len, fan = 0.06 / len;
  std::vector<std::vector<Pt>> out;
  for (int s : {1, -1}) {
    Pt head{o.x + fan * u - s * eps * v, o.y + fan * v + s * eps * u};
    Pt tail{o.x + (1 - fan) * u - s * eps * v, o.y + (1 - fan) * v + s * eps * u};
    out.push_back(sample({o, head, tail, {o.x + u, o.y + v}}));
  }
  return out;
}

Pt fold_pillowcase(Pt p) {
  double x = p.x - std::floor(p.x);
  double y = p.y - std::floor(p.y);
  if (y > 0.5) {
    x = 1.0 - x;
    y = 1.0 - y;
    if (x >= 1.0) x -= 1.0;
  }
  return {x, y};
}

// Sum over horizontal rows of pi^2 csc^2; differs from the Weierstrass
// function of the square lattice by a constant, which cancels below.
cd p_sum(cd z) {
  cd s = 0;
  for (int m = -8; m <= 8; ++m) {
    cd w = kPi * (z + cd(0, m));
    cd sn = std::sin(w);
    s += kPi * kPi / (sn * sn);
  }
  return s;
}

Pt disk_point(Pt p) {
  static const cd at_d = p_sum(cd(0.5, 0.5));
  cd z(p.x, p.y);
  cd g = 1.0 / (p_sum(z) - at_d);
  if (!std::isfinite(g.real()) || !std::isfinite(g.imag())) return {0, 0};
  double r = std::abs(g);
  double scale = r / (1.0 + r);
  return {r > 0 ? g.real() / r * scale : 0, r > 0 ? g.imag() / r * scale : 0};
}

struct Panel {
  double w;
  double h;
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void draw_paths(std::ostringstream& os, const std::vector<std::vector<Pt>>& paths, const std::string& colour,
                double width, double jump) {
  for (const auto& path : paths) {
    std::ostringstream d;
    bool open = false;
    Pt last{0, 0};
    for (const Pt& p : path) {
      if (!open || std::hypot(p.x - last.x, p.y - last.y) > jump) {
        d << " M" << fmt(p.x) << ',' << fmt(p.y);
        open = true;
      } else {
        d << " L" << fmt(p.x) << ',' << fmt(p.y);
      }
      last = p;
    }
    os << "<path d=\"" << d.str().substr(1) << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\""
       << width << "\"/>\n";
  }
}

void draw_panel(std::ostringstream& os, const RenderItem* item, View view, double ox, double oy, Panel panel) {
  const double margin = 24;
  os << "<g transform=\"translate(" << fmt(ox) << ',' << fmt(oy) << ")\">\n";
  os << "<text x=\"" << margin << "\" y=\"16\" font-family=\"sans-serif\" font-size=\"13\">"
     << escape(item ? item->title : std::string("(empty)")) << "</text>\n";
  double dw = panel.w - 2 * margin, dh = panel.h - 2 * margin - 10;
  auto to_screen = [&](Pt p) -> Pt {
    if (view == View::pillowcase) return {margin + p.x * dw, 30 + (0.5 - p.y) * 2 * dh};
    return {margin + (p.x + 1) / 2 * dw, 30 + (1 - p.y) / 2 * dh};
  };
  if (view == View::pillowcase) {
    Pt tl = to_screen({0, 0.5}), br = to_screen({1, 0});
    os << "<rect x=\"" << fmt(tl.x) << "\" y=\"" << fmt(tl.y) << "\" width=\"" << fmt(br.x - tl.x)
       << "\" height=\"" << fmt(br.y - tl.y) << "\" fill=\"#fafafa\" stroke=\"#999\"/>\n";
    Pt m0 = to_screen({0.5, 0.5}), m1 = to_screen({0.5, 0});
    os << "<line x1=\"" << fmt(m0.x) << "\" y1=\"" << fmt(m0.y) << "\" x2=\"" << fmt(m1.x) << "\" y2=\""
       << fmt(m1.y) << "\" stroke=\"#ccc\" stroke-dasharray=\"4 3\"/>\n";
  } else {
    Pt c = to_screen({0, 0});
    os << "<circle cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y) << "\" r=\"" << fmt(dw / 2)
       << "\" fill=\"#fafafa\" stroke=\"#999\"/>\n";
  }
  if (item) {
    auto j = disjoint_subset(item->system.arcs());
    int colour = 0;
    for (const auto& x : item->system.arcs()) {
      bool in_j = std::find(j.begin(), j.end(), x) != j.end();
      std::vector<std::vector<Pt>> screen;
      for (const auto& path : lift_paths(x)) {
        std::vector<Pt> s;
        for (const Pt& p : path) s.push_back(to_screen(view == View::pillowcase ? fold_pillowcase(p) : disk_point(p)));
        screen.push_back(std::move(s));
      }
      std::string stroke = in_j ? "#000000" : kPalette[colour++ % 12];
      os << "<g class=\"" << (in_j ? "arc j-arc" : "arc") << "\" data-arc=\"" << escape(to_string(x)) << "\">\n";
      draw_paths(os, screen, stroke, in_j ? 2.2 : 1.4, dw * 0.2);
      os << "</g>\n";
    }
  }
  struct Mark {
    Pt at;
    char label;
  };
  std::vector<Mark> marks;
  if (view == View::pillowcase) {
    marks = {{{0, 0}, 'a'}, {{1, 0}, 'a'}, {{0.5, 0}, 'b'}, {{0, 0.5}, 'c'}, {{1, 0.5}, 'c'}, {{0.5, 0.5}, 'd'}};
  } else {
    marks = {{disk_point({1e-9, 1e-9}), 'a'}, {disk_point({0.5, 0}), 'b'}, {disk_point({0, 0.5}), 'c'}};
  }
  for (char p : {'a', 'b', 'c', 'd'}) {
    bool any = std::any_of(marks.begin(), marks.end(), [&](const Mark& m) { return m.label == p; });
    if (!any) continue;
    os << "<g class=\"puncture\" data-label=\"" << p << "\">\n";
    for (const auto& m : marks) {
      if (m.label != p) continue;
      Pt s = to_screen(m.at);
      os << "<circle cx=\"" << fmt(s.x) << "\" cy=\"" << fmt(s.y) << "\" r=\"4\" fill=\"#fff\" stroke=\"#000\"/>\n";
      os << "<text x=\"" << fmt(s.x + 6) << "\" y=\"" << fmt(s.y - 6)
         << "\" font-family=\"sans-serif\" font-size=\"12\">" << m.label << "</text>\n";
    }
    os << "</g>\n";
  }
  if (view == View::disk) {
    Pt s = to_screen({0, 1});
    os << "<g class=\"puncture\" data-label=\"d\">\n<text x=\"" << fmt(s.x + 6) << "\" y=\"" << fmt(s.y - 4)
       << "\" font-family=\"sans-serif\" font-size=\"12\">d (boundary)</text>\n</g>\n";
  }
  os << "</g>\n";
}

}  // namespace

std::string render_svg(const std::vector<RenderItem>& items, View view) {
  Panel panel = view == View::pillowcase ? Panel{340, 210} : Panel{320, 340};
  std::size_t count = std::max<std::size_t>(1, items.size());
  std::size_t cols = std::min<std::size_t>(3, count);
  std::size_t rows = (count + cols - 1) / cols;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(cols * panel.w) << "\" height=\""
     << fmt(rows * panel.h) << "\" viewBox=\"0 0 " << fmt(cols * panel.w) << ' ' << fmt(rows * panel.h) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  for (std::size_t i = 0; i < count; ++i) {
    const RenderItem* item = items.empty() ? nullptr : &items[i];
    draw_panel(os, item, view, static_cast<double>(i % cols) * panel.w, static_cast<double>(i / cols) * panel.h, panel);
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace arcsys

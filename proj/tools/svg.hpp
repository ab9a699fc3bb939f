#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "instance.hpp"

namespace lcsp::cli {

// A ball in the original frame.
struct Ball {
  Point center;
  double radius = 0.0;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

// Unit L_p sphere: (sgn c |c|^(2/p), sgn s |s|^(2/p)) has |x|^p + |y|^p = 1.
inline std::vector<Point> lp_outline(const Ball& b, double p, int vertices) {
  std::vector<Point> out;
  const double e = 2.0 / p;
  for (int k = 0; k < vertices; ++k) {
    const double t = 2.0 * std::numbers::pi * k / vertices;
    const double c = std::cos(t), s = std::sin(t);
    out.push_back({b.center.x + b.radius * std::copysign(std::pow(std::abs(c), e), c),
                   b.center.y + b.radius * std::copysign(std::pow(std::abs(s), e), s)});
  }
  return out;
}

}  // namespace detail

class SvgPlot {
 public:
  SvgPlot(const Instance& inst, std::vector<Ball> balls, Segment line)
      : inst_(inst), balls_(std::move(balls)), line_(line) {
    auto grow = [&](Point q) {
      lo_.x = std::min(lo_.x, q.x);
      lo_.y = std::min(lo_.y, q.y);
      hi_.x = std::max(hi_.x, q.x);
      hi_.y = std::max(hi_.y, q.y);
    };
    lo_ = hi_ = line.a;
    grow(line.b);
    for (const Segment& s : inst.segments) {
      grow(s.a);
      grow(s.b);
    }
    for (Point q : inst.points) grow(q);
    for (const Ball& b : balls_) {
      grow({b.center.x - b.radius, b.center.y - b.radius});
      grow({b.center.x + b.radius, b.center.y + b.radius});
    }
    const double span = std::max({hi_.x - lo_.x, hi_.y - lo_.y, 1e-9});
    scale_ = (kWidth - 2 * kMargin) / span;
  }

  void write(std::ostream& os) const {
    using detail::fmt;
    const double w = kWidth;
    const double h = (hi_.y - lo_.y) * scale_ + 2 * kMargin;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
       << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    os << "<g class=\"obstacles\" stroke=\"#444\" fill=\"#444\" stroke-width=\"1\">\n";
    for (const Segment& s : inst_.segments) {
      if (s.degenerate()) {
        dot(os, s.a, 2.0, "");
      } else {
        os << "<line x1=\"" << fmt(sx(s.a)) << "\" y1=\"" << fmt(sy(s.a)) << "\" x2=\"" << fmt(sx(s.b)) << "\" y2=\""
           << fmt(sy(s.b)) << "\"/>\n";
      }
    }
    for (Point q : inst_.points) dot(os, q, 2.5, "");
    os << "</g>\n";

    os << "<line class=\"constraint\" stroke=\"#1f77b4\" stroke-width=\"3\" x1=\"" << fmt(sx(line_.a)) << "\" y1=\""
       << fmt(sy(line_.a)) << "\" x2=\"" << fmt(sx(line_.b)) << "\" y2=\"" << fmt(sy(line_.b)) << "\"/>\n";

    for (const Ball& b : balls_) {
      os << "<g class=\"ball\" stroke=\"#d62728\" fill=\"none\" stroke-width=\"1.5\">\n";
      if (inst_.p == 2.0) {
        os << "<circle cx=\"" << fmt(sx(b.center)) << "\" cy=\"" << fmt(sy(b.center)) << "\" r=\""
           << fmt(b.radius * scale_) << "\"/>\n";
      } else {
        os << "<polygon points=\"";
        const auto outline = detail::lp_outline(b, inst_.p, inst_.p == 1.0 ? 4 : 128);
        for (std::size_t k = 0; k < outline.size(); ++k) {
          os << (k ? " " : "") << fmt(sx(outline[k])) << "," << fmt(sy(outline[k]));
        }
        os << "\"/>\n";
      }
      dot(os, b.center, 3.0, " class=\"center\" fill=\"#d62728\"");
      os << "</g>\n";
    }
    os << "</svg>\n";
  }

 private:
  static constexpr double kWidth = 800.0;
  static constexpr double kMargin = 20.0;

  double sx(Point q) const { return kMargin + (q.x - lo_.x) * scale_; }
  // SVG y grows downwards.
  double sy(Point q) const { return kMargin + (hi_.y - q.y) * scale_; }

  void dot(std::ostream& os, Point q, double r, const char* extra) const {
    os << "<circle" << extra << " cx=\"" << detail::fmt(sx(q)) << "\" cy=\"" << detail::fmt(sy(q)) << "\" r=\""
       << detail::fmt(r) << "\"/>\n";
  }

  const Instance& inst_;
  std::vector<Ball> balls_;
  Segment line_;
  Point lo_, hi_;
  double scale_ = 1.0;
};

}  // namespace lcsp::cli

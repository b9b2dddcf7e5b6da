#include "sclab/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sclab {

std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string join_doubles(const std::vector<double>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(sep);
    out += fmt_double(v[i]);
  }
  return out;
}

std::vector<double> split_doubles(const std::string& s, char sep) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    if (tok.empty()) continue;
    out.push_back(std::stod(tok));
  }
  return out;
}

SvgPlot::SvgPlot(std::string title, std::string xlabel, std::string ylabel,
                 bool logx, bool logy)
    : title_(std::move(title)), xlabel_(std::move(xlabel)),
      ylabel_(std::move(ylabel)), logx_(logx), logy_(logy) {}

void SvgPlot::add_series(const std::string& label, const std::vector<double>& x,
                         const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("SvgPlot: size mismatch");
  series_.push_back({label, x, y});
}

void SvgPlot::write(const std::string& path) const {
  const int W = 640, H = 480, ml = 70, mr = 20, mt = 40, mb = 50;
  auto tx = [&](double v) { return logx_ ? std::log10(std::max(v, 1e-300)) : v; };
  auto ty = [&](double v) { return logy_ ? std::log10(std::max(v, 1e-300)) : v; };

  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& s : series_)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (logy_ && s.y[i] <= 0) continue;
      xmin = std::min(xmin, tx(s.x[i]));
      xmax = std::max(xmax, tx(s.x[i]));
      ymin = std::min(ymin, ty(s.y[i]));
      ymax = std::max(ymax, ty(s.y[i]));
    }
  if (xmin > xmax) { xmin = 0; xmax = 1; }
  if (ymin > ymax) { ymin = 0; ymax = 1; }
  if (xmax - xmin < 1e-12) { xmax += 0.5; xmin -= 0.5; }
  if (ymax - ymin < 1e-12) { ymax += 0.5; ymin -= 0.5; }

  auto px = [&](double v) {
    return ml + (tx(v) - xmin) / (xmax - xmin) * (W - ml - mr);
  };
  auto py = [&](double v) {
    return H - mb - (ty(v) - ymin) / (ymax - ymin) * (H - mt - mb);
  };

  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                 "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  std::ofstream os(path);
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H
     << "' font-family='sans-serif' font-size='12'>\n";
  os << "<rect width='" << W << "' height='" << H << "' fill='white'/>\n";
  os << "<text x='" << W / 2 << "' y='20' text-anchor='middle' font-size='14'>"
     << title_ << "</text>\n";
  // axes
  os << "<line x1='" << ml << "' y1='" << H - mb << "' x2='" << W - mr << "' y2='"
     << H - mb << "' stroke='black'/>\n";
  os << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='" << H - mb
     << "' stroke='black'/>\n";
  os << "<text x='" << (ml + W - mr) / 2 << "' y='" << H - 12
     << "' text-anchor='middle'>" << xlabel_ << "</text>\n";
  os << "<text x='16' y='" << (mt + H - mb) / 2
     << "' text-anchor='middle' transform='rotate(-90 16 " << (mt + H - mb) / 2
     << ")'>" << ylabel_ << "</text>\n";
  // ticks
  for (int k = 0; k <= 4; ++k) {
    const double fx = xmin + (xmax - xmin) * k / 4.0;
    const double fy = ymin + (ymax - ymin) * k / 4.0;
    const double vx = logx_ ? std::pow(10.0, fx) : fx;
    const double vy = logy_ ? std::pow(10.0, fy) : fy;
    const double X = ml + (W - ml - mr) * k / 4.0;
    const double Y = H - mb - (H - mt - mb) * k / 4.0;
    os << "<line x1='" << X << "' y1='" << H - mb << "' x2='" << X << "' y2='"
       << H - mb + 4 << "' stroke='black'/>\n";
    os << "<text x='" << X << "' y='" << H - mb + 18 << "' text-anchor='middle'>"
       << fmt_double(std::round(vx * 1e4) / 1e4) << "</text>\n";
    os << "<line x1='" << ml - 4 << "' y1='" << Y << "' x2='" << ml << "' y2='" << Y
       << "' stroke='black'/>\n";
    os << "<text x='" << ml - 8 << "' y='" << Y + 4 << "' text-anchor='end'>"
       << fmt_double(std::round(vy * 1e4) / 1e4) << "</text>\n";
  }
  // series
  for (std::size_t si = 0; si < series_.size(); ++si) {
    const auto& s = series_[si];
    const char* col = colors[si % 8];
    std::ostringstream pts;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (logy_ && s.y[i] <= 0) continue;
      pts << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
    }
    os << "<polyline fill='none' stroke='" << col << "' stroke-width='1.5' points='"
       << pts.str() << "'/>\n";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (logy_ && s.y[i] <= 0) continue;
      os << "<circle cx='" << px(s.x[i]) << "' cy='" << py(s.y[i])
         << "' r='2.5' fill='" << col << "'/>\n";
    }
    os << "<text x='" << W - mr - 150 << "' y='" << mt + 16 * si + 12
       << "' fill='" << col << "'>" << s.label << "</text>\n";
  }
  os << "</svg>\n";
}

void ensure_directory(const std::string& path) {
  std::filesystem::create_directories(path);
}

}  // namespace sclab

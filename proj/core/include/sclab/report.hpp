#pragma once

#include <string>
#include <vector>

namespace sclab {

/// Shortest round-trip decimal for a double (to_chars); the CSV contract.
std::string fmt_double(double v);

std::string join_doubles(const std::vector<double>& v, char sep = ',');
std::vector<double> split_doubles(const std::string& s, char sep = ',');

/// Minimal polyline plot writer (optionally log-log), enough for the
/// measured-vs-bound verification figures. No plotting dependency.
class SvgPlot {
 public:
  SvgPlot(std::string title, std::string xlabel, std::string ylabel, bool logx,
          bool logy);
  void add_series(const std::string& label, const std::vector<double>& x,
                  const std::vector<double>& y);
  void write(const std::string& path) const;

 private:
  std::string title_, xlabel_, ylabel_;
  bool logx_, logy_;
  struct Series {
    std::string label;
    std::vector<double> x, y;
  };
  std::vector<Series> series_;
};

void ensure_directory(const std::string& path);

}  // namespace sclab

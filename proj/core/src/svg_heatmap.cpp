#include "aec/svg_heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "aec/csv.hpp"

namespace aec {

namespace {

constexpr int kCell = 36;
constexpr int kPad = 12;
constexpr Eigen::Index kLabelLimit = 20;

std::string escape_xml(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (const char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string cell_color(double v) {
  v = std::clamp(v, -1.0, 1.0);
  int r = 255, g = 255, b = 255;
  if (v >= 0.0) {
    g = b = static_cast<int>(std::lround(255.0 * (1.0 - v)));
  } else {
    r = g = static_cast<int>(std::lround(255.0 * (1.0 + v)));
  }
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
  return buf;
}

std::string format_cell_value(double v) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string heatmap_svg(const CorrelationMatrix& c) {
  const Eigen::Index n = c.values.rows();
  std::size_t longest_name = 0;
  for (const auto& name : c.names) longest_name = std::max(longest_name, name.size());
  const int margin = kPad + 8 * static_cast<int>(longest_name);
  const int width = margin + static_cast<int>(n) * kCell + kPad;
  const int height = margin + static_cast<int>(n) * kCell + kPad;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) + "\">\n";
  svg += "<g font-family=\"monospace\">\n";

  for (Eigen::Index row = 0; row < n; ++row) {
    for (Eigen::Index col = 0; col < n; ++col) {
      const double v = c.values(row, col);
      const int x = margin + static_cast<int>(col) * kCell;
      const int y = margin + static_cast<int>(row) * kCell;
      svg += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
             "\" width=\"" + std::to_string(kCell) + "\" height=\"" +
             std::to_string(kCell) + "\" fill=\"" + cell_color(v) + "\"/>\n";
      if (n <= kLabelLimit) {
        const char* text_color = std::abs(v) > 0.6 ? "#ffffff" : "#000000";
        svg += "<text x=\"" + std::to_string(x + kCell / 2) + "\" y=\"" +
               std::to_string(y + kCell / 2 + 4) +
               "\" text-anchor=\"middle\" font-size=\"10\" fill=\"" + text_color +
               "\">" + format_cell_value(v) + "</text>\n";
      }
    }
  }

  for (Eigen::Index row = 0; row < n; ++row) {
    const int y = margin + static_cast<int>(row) * kCell + kCell / 2 + 4;
    svg += "<text x=\"" + std::to_string(margin - 6) + "\" y=\"" + std::to_string(y) +
           "\" text-anchor=\"end\" font-size=\"12\">" +
           escape_xml(c.names[static_cast<std::size_t>(row)]) + "</text>\n";
  }
  for (Eigen::Index col = 0; col < n; ++col) {
    const int x = margin + static_cast<int>(col) * kCell + kCell / 2;
    svg += "<text transform=\"translate(" + std::to_string(x) + "," +
           std::to_string(margin - 6) +
           ") rotate(-45)\" text-anchor=\"start\" font-size=\"12\">" +
           escape_xml(c.names[static_cast<std::size_t>(col)]) + "</text>\n";
  }

  svg += "</g>\n</svg>\n";
  return svg;
}

void render_heatmap(const CorrelationMatrix& c, const std::filesystem::path& path) {
  write_text_file(path, heatmap_svg(c));
}

}  // namespace aec

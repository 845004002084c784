#include "hamtsp/instance_io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "hamtsp/error.hpp"

namespace hamtsp {

namespace {

// Whitespace tokens with comment lines dropped.
std::vector<std::string> tokenize(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

double to_double(const std::string& tok) {
  double x = 0.0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, x);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kParseError, "expected a number, got '" + tok + "'");
  }
  return x;
}

int to_count(const std::string& tok) {
  int x = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, x);
  if (ec != std::errc() || ptr != end || x < 0) {
    throw Error(ErrorCode::kParseError, "expected a vertex count, got '" + tok + "'");
  }
  return x;
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

Instance parse_instance(std::istream& in, std::string name) {
  const auto tokens = tokenize(in);
  if (tokens.empty()) throw Error(ErrorCode::kParseError, "empty instance file");
  std::size_t pos = 0;
  const bool euclidean = tokens[0] == "EUC2D";
  if (euclidean) ++pos;
  if (pos >= tokens.size()) throw Error(ErrorCode::kParseError, "missing vertex count");
  const int p = to_count(tokens[pos++]);
  const std::size_t need = euclidean ? 2 * static_cast<std::size_t>(p)
                                     : static_cast<std::size_t>(p) * p;
  if (tokens.size() - pos != need) {
    throw Error(ErrorCode::kParseError,
                "expected " + std::to_string(need) + " numbers after the header, got " +
                    std::to_string(tokens.size() - pos));
  }
  if (euclidean) {
    std::vector<Point> points(static_cast<std::size_t>(p));
    for (auto& pt : points) {
      pt.x = to_double(tokens[pos++]);
      pt.y = to_double(tokens[pos++]);
    }
    return Instance::from_points(std::move(points), std::move(name));
  }
  std::vector<double> w(need);
  for (double& x : w) x = to_double(tokens[pos++]);
  return Instance::from_matrix(p, std::move(w), std::move(name));
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  return parse_instance(in, std::filesystem::path(path).stem().string());
}

void write_instance(std::ostream& out, const Instance& inst) {
  const int p = inst.size();
  if (!inst.name().empty()) out << "# " << inst.name() << '\n';
  if (inst.has_coords()) {
    out << "EUC2D\n" << p << '\n';
    for (const Point& pt : inst.coords()) {
      out << format_number(pt.x) << ' ' << format_number(pt.y) << '\n';
    }
    return;
  }
  out << p << '\n';
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (j) out << ' ';
      out << format_number(inst.weight(i, j));
    }
    out << '\n';
  }
}

void write_instance_file(const std::string& path, const Instance& inst) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path + "'");
  write_instance(out, inst);
  if (!out) throw Error(ErrorCode::kIoError, "write failed for '" + path + "'");
}

}  // namespace hamtsp

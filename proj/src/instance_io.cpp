#include "instance_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "error.hpp"

namespace divmax {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])))
        ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty() && line.tokens.front().front() != '#')
      lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& reason) {
  fail(ErrorCode::kParse, "line " + std::to_string(line) + ": " + reason);
}

std::size_t parse_count(std::string_view tok, std::size_t line,
                        const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    parse_error(line, std::string("invalid ") + what + " '" +
                          std::string(tok) + "'");
  return value;
}

double parse_real(std::string_view tok, std::size_t line) {
  // strtod rather than from_chars<double>: libstdc++ 11 lacks the latter.
  std::string buf(tok);
  char* end = nullptr;
  const double value = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || !std::isfinite(value))
    parse_error(line, "invalid real '" + buf + "'");
  return value;
}

}  // namespace

MetricInstance parse_instance(std::string_view text, double q, bool validate) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) parse_error(1, "empty instance file");
  const Line& header = lines.front();
  const std::string_view kind = header.tokens.front();

  std::size_t n = 0;
  std::size_t width = 0;
  std::size_t dim = 0;
  Norm norm = Norm::kL2;
  if (kind == "points") {
    if (header.tokens.size() != 4)
      parse_error(header.number, "expected 'points <D> <n> <norm>'");
    dim = parse_count(header.tokens[1], header.number, "dimension");
    n = parse_count(header.tokens[2], header.number, "point count");
    try {
      norm = parse_norm(header.tokens[3]);
    } catch (const Error& e) {
      parse_error(header.number, e.what());
    }
    if (dim == 0) parse_error(header.number, "dimension must be >= 1");
    width = dim;
  } else if (kind == "matrix") {
    if (header.tokens.size() != 2)
      parse_error(header.number, "expected 'matrix <n>'");
    n = parse_count(header.tokens[1], header.number, "point count");
    width = n;
  } else {
    parse_error(header.number, "unknown instance kind '" + std::string(kind) +
                                   "' (expected 'points' or 'matrix')");
  }
  if (n < 2) parse_error(header.number, "an instance needs at least 2 points");

  if (lines.size() - 1 < n)
    parse_error(lines.back().number,
                "expected " + std::to_string(n) + " data lines, found " +
                    std::to_string(lines.size() - 1));
  if (lines.size() - 1 > n)
    parse_error(lines[n + 1].number, "unexpected data after " +
                                         std::to_string(n) + " rows");

  std::vector<double> values;
  values.reserve(n * width);
  for (std::size_t r = 0; r < n; ++r) {
    const Line& line = lines[r + 1];
    if (line.tokens.size() != width)
      parse_error(line.number, "expected " + std::to_string(width) +
                                   " values, found " +
                                   std::to_string(line.tokens.size()));
    for (std::string_view tok : line.tokens)
      values.push_back(parse_real(tok, line.number));
  }

  try {
    if (dim > 0)
      return MetricInstance::from_points(std::move(values), dim, norm, q);
    return MetricInstance::from_matrix(std::move(values), n, q, validate);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInvalidArgument) throw;
    parse_error(header.number, e.what());
  }
}

MetricInstance load_instance(const std::string& path, double q,
                             bool validate) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), q, validate);
}

namespace {

void append_real(std::string& out, double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ptr);
}

}  // namespace

std::string format_instance(const MetricInstance& inst) {
  std::string out;
  const std::size_t n = inst.size();
  std::size_t width = n;
  if (inst.has_coordinates()) {
    width = inst.dimension();
    out += "points " + std::to_string(width) + " " + std::to_string(n) + " " +
           std::string(norm_name(inst.norm())) + "\n";
  } else {
    out += "matrix " + std::to_string(n) + "\n";
  }
  const std::span<const double> data = inst.coordinates();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      if (c > 0) out += ' ';
      append_real(out, data[r * width + c]);
    }
    out += '\n';
  }
  return out;
}

void save_instance(const MetricInstance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::kIo, "cannot write instance file '" + path + "'");
  out << format_instance(inst);
  if (!out) fail(ErrorCode::kIo, "write failed for '" + path + "'");
}

}  // namespace divmax

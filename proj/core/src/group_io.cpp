#include "fusionkit/group_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "fusionkit/error.hpp"

namespace fusionkit {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Permutation parse_generator(std::size_t degree, const std::string& raw) {
  const std::string line = trim(raw);
  if (line.find('(') != std::string::npos) return Permutation::from_cycles(degree, line);

  std::istringstream in(line);
  std::vector<Point> images;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(0, "not an integer: \"" + tok + "\"");
    }
    if (used != tok.size()) throw ParseError(0, "not an integer: \"" + tok + "\"");
    if (v == 0 || v > degree) throw ParseError(0, "image " + tok + " outside 1.." + std::to_string(degree));
    images.push_back(static_cast<Point>(v - 1));
  }
  if (images.size() != degree)
    throw ParseError(0, "expected " + std::to_string(degree) + " images, got " + std::to_string(images.size()));
  try {
    return Permutation(std::move(images));
  } catch (const InvalidPermutation& e) {
    throw ParseError(0, e.what());
  }
}

GroupSpec parse_group_text(const std::string& text) {
  GroupSpec spec;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool have_degree = false;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (!have_degree) {
      std::size_t used = 0;
      unsigned long d = 0;
      try {
        d = std::stoul(line, &used);
      } catch (const std::exception&) {
        throw ParseError(lineno, "expected the degree, got \"" + line + "\"");
      }
      if (used != line.size() || d == 0 || d > 65535)
        throw ParseError(lineno, "invalid degree \"" + line + "\"");
      spec.degree = d;
      have_degree = true;
      continue;
    }
    try {
      spec.generators.push_back(parse_generator(spec.degree, line));
    } catch (const ParseError& e) {
      throw ParseError(lineno, e.what());
    } catch (const InvalidPermutation& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!have_degree) throw ParseError(lineno == 0 ? 1 : lineno, "missing degree line");
  return spec;
}

GroupSpec read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str());
}

std::string format_group_text(const GroupSpec& spec, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  out << spec.degree << '\n';
  for (const auto& g : spec.generators) out << g.to_cycle_string() << '\n';
  return out.str();
}

void write_group_file(const std::string& path, const GroupSpec& spec, const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << format_group_text(spec, comment);
}

}  // namespace fusionkit

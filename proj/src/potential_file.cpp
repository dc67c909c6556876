#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "lsfc/cli.hpp"
#include "lsfc/error.hpp"

namespace lsfc {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

template <typename T>
bool parse_whole(const std::string& tok, T& value) {
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  return ec == std::errc() && ptr == end;
}

}  // namespace

PolynomialPotential parse_potential(std::istream& in) {
  std::vector<Monomial> terms;
  int dims = 0;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() < 2) throw ParseError("expected 'coeff e1 ... eD'", line_no);

    Monomial m;
    std::string coeff = fields[0];
    if (!coeff.empty() && coeff[0] == '+') coeff.erase(0, 1);
    if (!parse_whole(coeff, m.coefficient) || !std::isfinite(m.coefficient))
      throw ParseError("bad coefficient '" + fields[0] + "'", line_no);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      int e = 0;
      if (!parse_whole(fields[i], e) || e < 0) throw ParseError("bad exponent '" + fields[i] + "'", line_no);
      m.exponents.push_back(e);
    }
    const int d = static_cast<int>(m.exponents.size());
    if (dims == 0) dims = d;
    if (d != dims)
      throw ParseError("term has " + std::to_string(d) + " exponents, earlier terms have " + std::to_string(dims),
                       line_no);
    if (m.degree() > PolynomialPotential::kDefaultMaxDegree)
      throw ParseError("degree " + std::to_string(m.degree()) + " exceeds " +
                           std::to_string(PolynomialPotential::kDefaultMaxDegree),
                       line_no);
    terms.push_back(std::move(m));
  }
  if (terms.empty()) throw ParseError("potential file has no terms");
  return PolynomialPotential(dims, std::move(terms));
}

PolynomialPotential parse_potential_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open potential file '" + path + "'");
  return parse_potential(in);
}

}  // namespace lsfc

#include "qseries/bracket.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "qseries/errors.hpp"

namespace qseries {

BracketSpec::BracketSpec(int c1, int c2, int c3, int c4) : c{c1, c2, c3, c4} {
  for (int x : c) {
    if (x < 1 || x > 22) throw DomainError("bracket entries must lie in 1..22");
  }
}

ProductSpec BracketSpec::to_product_spec() const {
  std::vector<PochhammerFactor> f;
  f.push_back({Placement::Numerator, 45, 1, 45, 1});
  f.push_back({Placement::Denominator, 3, 1, 3, 1});
  for (int x : c) {
    f.push_back({Placement::Denominator, 45, 1, x, 1});
    f.push_back({Placement::Denominator, 45, 1, 45 - x, 1});
  }
  return ProductSpec(std::move(f));
}

BracketSpec BracketSpec::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  std::string body;
  if (s.size() > 4 && s.rfind("br(", 0) == 0 && s.back() == ')') {
    body = s.substr(3, s.size() - 4);
  } else if (s.size() > 2 && s.front() == '<' && s.back() == '>') {
    body = s.substr(1, s.size() - 2);
  } else {
    throw UsageError("cannot parse bracket '" + std::string(text) + "'");
  }
  std::vector<int> v;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.size() > 3 ||
        item.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("bad bracket entry '" + item + "'");
    }
    v.push_back(std::stoi(item));
  }
  if (v.size() != 4) throw UsageError("a bracket has exactly four entries");
  try {
    return BracketSpec(v[0], v[1], v[2], v[3]);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::string BracketSpec::to_string() const {
  std::ostringstream os;
  os << "br(" << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << ")";
  return os.str();
}

LaurentSeries bracket(const BracketSpec& spec, int order) {
  return expand_product(spec.to_product_spec(), order);
}

}  // namespace qseries

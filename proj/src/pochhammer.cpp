#include "qseries/pochhammer.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <tuple>

#include "qseries/bracket.hpp"
#include "qseries/errors.hpp"

namespace qseries {

LaurentSeries pochhammer_finite(int sign, int c, int m, int n) {
  return pochhammer_finite(sign, c, m, n, Precision::exact());
}

LaurentSeries pochhammer_finite(int sign, int c, int m, int n, Precision precision) {
  if (sign != 1 && sign != -1) throw DomainError("Pochhammer sign must be +1 or -1");
  if (n < 0) throw DomainError("negative Pochhammer length");
  LaurentSeries p = precision.apply(LaurentSeries::one());
  for (int j = 0; j < n; ++j) {
    const int e = c + j * m;
    if (e >= 1) {
      if (precision.drops(e)) {
        if (m > 0) break;
        continue;
      }
      p.mul_one_minus(sign, e);
    } else {
      p *= LaurentSeries::one() + LaurentSeries::monomial(e, -sign);
    }
  }
  return p;
}

LaurentSeries pochhammer_infinite(int sign, int c, int m, int order) {
  if (c < 1) throw DomainError("infinite Pochhammer symbol needs a positive offset");
  if (m < 1) throw DomainError("infinite Pochhammer symbol needs a positive modulus");
  if (sign != 1 && sign != -1) throw DomainError("Pochhammer sign must be +1 or -1");
  LaurentSeries p = LaurentSeries::one().truncate(order);
  for (int e = c; e <= order; e += m) p.mul_one_minus(sign, e);
  return p;
}

ProductSpec::ProductSpec(std::vector<PochhammerFactor> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    if (f.offset < 1) throw DomainError("product factor offset must be >= 1");
    if (f.modulus < 1) throw DomainError("product factor modulus must be >= 1");
    if (f.multiplicity < 1) throw DomainError("product factor multiplicity must be >= 1");
    if (f.sign != 1 && f.sign != -1) throw DomainError("product factor sign must be +1 or -1");
  }
  canonicalize();
}

ProductSpec ProductSpec::denominator(int modulus, const std::vector<int>& offsets) {
  std::vector<PochhammerFactor> f;
  for (int c : offsets) f.push_back({Placement::Denominator, modulus, 1, c, 1});
  return ProductSpec(std::move(f));
}

ProductSpec ProductSpec::numerator(int modulus, const std::vector<int>& offsets, int sign) {
  std::vector<PochhammerFactor> f;
  for (int c : offsets) f.push_back({Placement::Numerator, modulus, sign, c, 1});
  return ProductSpec(std::move(f));
}

void ProductSpec::canonicalize() {
  std::sort(factors_.begin(), factors_.end());
  std::vector<PochhammerFactor> merged;
  for (const auto& f : factors_) {
    if (!merged.empty()) {
      auto& last = merged.back();
      if (last.placement == f.placement && last.modulus == f.modulus && last.sign == f.sign &&
          last.offset == f.offset) {
        last.multiplicity += f.multiplicity;
        continue;
      }
    }
    merged.push_back(f);
  }
  // a factor present in both numerator and denominator cancels
  std::map<std::tuple<int, int, int>, int> net;
  for (const auto& f : merged) {
    net[{f.modulus, f.sign, f.offset}] += f.placement == Placement::Numerator ? f.multiplicity : -f.multiplicity;
  }
  factors_.clear();
  for (const auto& f : merged) {
    int& k = net[{f.modulus, f.sign, f.offset}];
    if (k > 0 && f.placement == Placement::Numerator) {
      factors_.push_back({f.placement, f.modulus, f.sign, f.offset, k});
      k = 0;
    } else if (k < 0 && f.placement == Placement::Denominator) {
      factors_.push_back({f.placement, f.modulus, f.sign, f.offset, -k});
      k = 0;
    }
  }
}

bool ProductSpec::all_in_denominator() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const PochhammerFactor& f) { return f.placement == Placement::Denominator; });
}

ProductSpec ProductSpec::reciprocal() const {
  std::vector<PochhammerFactor> f = factors_;
  for (auto& x : f) {
    x.placement = x.placement == Placement::Numerator ? Placement::Denominator : Placement::Numerator;
  }
  return ProductSpec(std::move(f));
}

ProductSpec& ProductSpec::operator*=(const ProductSpec& other) {
  factors_.insert(factors_.end(), other.factors_.begin(), other.factors_.end());
  canonicalize();
  return *this;
}

namespace {

void write_groups(std::ostringstream& os, const std::vector<PochhammerFactor>& fs, Placement where) {
  std::map<int, std::vector<const PochhammerFactor*>> by_modulus;
  for (const auto& f : fs) {
    if (f.placement == where) by_modulus[f.modulus].push_back(&f);
  }
  for (const auto& [modulus, group] : by_modulus) {
    std::vector<std::pair<int, int>> terms;  // (offset, sign) with repeats
    for (const auto* f : group) {
      for (int r = 0; r < f->multiplicity; ++r) terms.emplace_back(f->offset, f->sign);
    }
    std::sort(terms.begin(), terms.end());
    os << "(";
    for (size_t i = 0; i < terms.size(); ++i) {
      if (i) os << ",";
      if (terms[i].second < 0) os << "-";
      os << "q";
      if (terms[i].first != 1) os << "^" << terms[i].first;
    }
    os << ";q";
    if (modulus != 1) os << "^" << modulus;
    os << ")";
  }
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) text_ += ch;
    }
  }

  ProductSpec parse() {
    if (text_.rfind("br(", 0) == 0 || text_.rfind("<", 0) == 0) {
      return BracketSpec::parse(text_).to_product_spec();
    }
    std::vector<PochhammerFactor> factors;
    if (peek() == '1') {
      ++pos_;
    } else {
      if (peek() != '(') fail("expected '1' or '(' at the start of a product");
      while (peek() == '(') group(Placement::Numerator, factors);
    }
    if (peek() == '/') {
      ++pos_;
      if (peek() != '(') fail("expected '(' after '/'");
      while (peek() == '(') group(Placement::Denominator, factors);
    }
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return ProductSpec(std::move(factors));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("cannot parse product spec '" + text_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int number() {
    size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 6) fail("number too large");
    return std::stoi(text_.substr(start, pos_ - start));
  }

  // q or q^k
  int power_of_q() {
    expect('q');
    if (peek() == '^') {
      ++pos_;
      return number();
    }
    return 1;
  }

  void group(Placement placement, std::vector<PochhammerFactor>& out) {
    expect('(');
    std::vector<std::pair<int, int>> terms;
    for (;;) {
      int sign = 1;
      if (peek() == '-') {
        sign = -1;
        ++pos_;
      }
      terms.emplace_back(power_of_q(), sign);
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    expect(';');
    const int modulus = power_of_q();
    expect(')');
    int power = 1;
    if (peek() == '^') {
      ++pos_;
      power = number();
    }
    // an optional "_inf" / "_\infty" subscript is tolerated
    if (peek() == '_') {
      ++pos_;
      while (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '\\') ++pos_;
    }
    for (const auto& [offset, sign] : terms) {
      if (offset < 1 || modulus < 1 || power < 1) fail("offsets, moduli and powers must be positive");
      out.push_back({placement, modulus, sign, offset, power});
    }
  }

  std::string text_;
  size_t pos_ = 0;
};

}  // namespace

ProductSpec ProductSpec::parse(std::string_view text) { return SpecParser(text).parse(); }

std::string ProductSpec::to_string() const {
  std::ostringstream os;
  const bool has_numerator = std::any_of(factors_.begin(), factors_.end(), [](const PochhammerFactor& f) {
    return f.placement == Placement::Numerator;
  });
  if (has_numerator) {
    write_groups(os, factors_, Placement::Numerator);
  } else {
    os << "1";
  }
  if (!all_in_denominator() || !has_numerator) {
    if (std::any_of(factors_.begin(), factors_.end(),
                    [](const PochhammerFactor& f) { return f.placement == Placement::Denominator; })) {
      os << "/";
      write_groups(os, factors_, Placement::Denominator);
    }
  }
  return os.str();
}

LaurentSeries expand_product(const ProductSpec& spec, int order) {
  LaurentSeries p = LaurentSeries::one().truncate(order);
  for (const auto& f : spec.factors()) {
    for (int r = 0; r < f.multiplicity; ++r) {
      for (int e = f.offset; e <= order; e += f.modulus) {
        if (f.placement == Placement::Numerator) {
          p.mul_one_minus(f.sign, e);
        } else {
          p.div_one_minus(f.sign, e);
        }
      }
    }
  }
  return p;
}

}  // namespace qseries

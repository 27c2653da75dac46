#include "groupwalk/distribution.hpp"

#include <sstream>

#include "groupwalk/omp_compat.hpp"

namespace groupwalk {

namespace {

void require_same_group(const GroupDistribution& x, const GroupDistribution& y) {
  if (!same_group(x.group(), y.group())) {
    throw InvalidParameterError("distributions live on different groups");
  }
}

}  // namespace

GroupDistribution GroupDistribution::point_mass(const FiniteGroup& g, int k) {
  if (k < 0 || k >= g.order()) {
    throw InvalidParameterError("point mass index out of range");
  }
  std::vector<Rational> p(g.order(), Rational(0));
  p[k] = Rational(1);
  return GroupDistribution(g, std::move(p));
}

GroupDistribution GroupDistribution::uniform(const FiniteGroup& g) {
  std::vector<Rational> p(g.order(), Rational(1, g.order()));
  return GroupDistribution(g, std::move(p));
}

GroupDistribution GroupDistribution::from_weights(const FiniteGroup& g,
                                                  std::vector<Rational> weights) {
  if (static_cast<int>(weights.size()) != g.order()) {
    throw InvalidParameterError("weight vector length differs from the group order");
  }
  Rational total(0);
  for (const auto& w : weights) {
    if (w.sign() < 0) throw InvalidParameterError("negative weight");
    total += w;
  }
  if (total.is_zero()) throw InvalidParameterError("all weights are zero");
  for (auto& w : weights) w /= total;
  return GroupDistribution(g, std::move(weights));
}

GroupDistribution GroupDistribution::from_probs(const FiniteGroup& g,
                                                std::vector<Rational> probs) {
  if (static_cast<int>(probs.size()) != g.order()) {
    throw InvalidParameterError("probability vector length differs from the group order");
  }
  Rational total(0);
  for (const auto& p : probs) {
    if (p.sign() < 0) throw InvalidParameterError("negative probability");
    total += p;
  }
  if (total != Rational(1)) {
    throw InvalidParameterError("probabilities sum to " + total.str() + ", expected 1");
  }
  return GroupDistribution(g, std::move(probs));
}

std::vector<int> GroupDistribution::support() const {
  std::vector<int> s;
  for (int k = 0; k < size(); ++k) {
    if (probs_[k].sign() > 0) s.push_back(k);
  }
  return s;
}

bool GroupDistribution::full_support() const {
  for (const auto& p : probs_) {
    if (p.sign() <= 0) return false;
  }
  return true;
}

std::size_t GroupDistribution::max_entry_bits() const {
  std::size_t bits = 0;
  for (const auto& p : probs_) bits = std::max(bits, p.bit_size());
  return bits;
}

GroupDistribution convolve(const GroupDistribution& x, const GroupDistribution& y) {
  require_same_group(x, y);
  const FiniteGroup& g = x.group();
  const int n = g.order();
  const CayleyTable& t = g.table();
  std::vector<int> inv(n);
  for (int l = 0; l < n; ++l) inv[l] = g.inverse(l);
  // result[m] = sum_l x[m * l^-1] * y[l]: each output entry is an
  // independent sum walking row m of the table, so entries parallelize
  // with exact determinism (rational addition commutes exactly).
  std::vector<Rational> r(n);
#pragma omp parallel for schedule(static) if (n >= 32)
  for (int m = 0; m < n; ++m) {
    Rational acc(0);
    for (int l = 0; l < n; ++l) {
      if (y.prob(l).is_zero()) continue;
      acc += x.prob(t.at(m, inv[l])) * y.prob(l);
    }
    r[m] = std::move(acc);
  }
  return GroupDistribution::from_probs(g, std::move(r));
}

namespace reference {

GroupDistribution convolve(const GroupDistribution& x, const GroupDistribution& y) {
  require_same_group(x, y);
  const FiniteGroup& g = x.group();
  const int n = g.order();
  std::vector<Rational> r(n, Rational(0));
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      r[g.table().at(k, l)] += x.prob(k) * y.prob(l);
    }
  }
  return GroupDistribution::from_probs(g, std::move(r));
}

}  // namespace reference

Rational tv_distance(const GroupDistribution& x, const GroupDistribution& y) {
  require_same_group(x, y);
  Rational sum(0);
  for (int k = 0; k < x.size(); ++k) {
    sum += abs(x.prob(k) - y.prob(k));
  }
  return sum / Rational(2);
}

GroupDistribution parse_distribution(const std::string& text, const FiniteGroup& g,
                                     bool normalize) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  const int n = g.order();
  std::vector<Rational> values(n, Rational(0));
  std::vector<bool> seen(n, false);
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long k = 0;
    std::string ptext;
    if (!(ls >> k >> ptext)) throw ParseError(lineno, "expected 'index probability'");
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "unexpected token '" + extra + "'");
    if (k < 1 || k > n) {
      throw ParseError(lineno, "index " + std::to_string(k) + " out of range [1," +
                                   std::to_string(n) + "]");
    }
    if (seen[k - 1]) throw ParseError(lineno, "duplicate index " + std::to_string(k));
    seen[k - 1] = true;
    Rational p;
    try {
      p = Rational::parse(ptext);
    } catch (const ParseError& e) {
      throw ParseError(lineno, e.what());
    }
    if (p.sign() < 0) throw ParseError(lineno, "negative probability " + ptext);
    values[k - 1] = std::move(p);
  }
  if (normalize) return GroupDistribution::from_weights(g, std::move(values));
  return GroupDistribution::from_probs(g, std::move(values));
}

std::string serialize_distribution(const GroupDistribution& x) {
  std::string out = "# distribution over a group of order " + std::to_string(x.size()) + "\n";
  for (int k = 0; k < x.size(); ++k) {
    out += std::to_string(k + 1);
    out += ' ';
    out += x.prob(k).str();
    out += '\n';
  }
  return out;
}

}  // namespace groupwalk

#include <algorithm>
#include <map>
#include <optional>

#include "dispersion/certify.hpp"

namespace dispersion {
namespace {

using Terms = std::vector<std::pair<std::size_t, Rational>>;

// Scales so the first coefficient is +1 or -1.
LinearRow normalized(LinearRow row) {
  std::erase_if(row.terms, [](const auto& t) { return t.second == Rational(0); });
  if (row.terms.empty()) return row;
  const Rational scale = abs(row.terms.front().second);
  if (scale != Rational(1)) {
    for (auto& [var, c] : row.terms) c /= scale;
    row.bound /= scale;
  }
  return row;
}

std::optional<Rational> coefficient(const LinearRow& row, std::size_t var) {
  for (const auto& [v, c] : row.terms) {
    if (v == var) return c;
  }
  return std::nullopt;
}

LinearRow combine(const LinearRow& pos, const Rational& cp, const LinearRow& neg, const Rational& cn,
                  std::size_t var) {
  // pos/cp + neg/|cn| eliminates var.
  const Rational wp = Rational(1) / cp;
  const Rational wn = Rational(1) / (-cn);
  std::map<std::size_t, Rational> acc;
  for (const auto& [v, c] : pos.terms) {
    if (v != var) acc[v] += c * wp;
  }
  for (const auto& [v, c] : neg.terms) {
    if (v != var) acc[v] += c * wn;
  }
  LinearRow out;
  out.bound = pos.bound * wp + neg.bound * wn;
  for (auto& [v, c] : acc) out.terms.emplace_back(v, c);
  return normalized(std::move(out));
}

class RowSet {
 public:
  // Returns false if a constant row is violated.
  bool add(LinearRow row) {
    row = normalized(std::move(row));
    if (row.terms.empty()) return row.bound >= Rational(0);
    auto [it, inserted] = best_.try_emplace(row.terms, row.bound);
    if (!inserted && row.bound < it->second) it->second = row.bound;
    return true;
  }

  std::vector<LinearRow> rows() const {
    std::vector<LinearRow> out;
    out.reserve(best_.size());
    for (const auto& [terms, bound] : best_) out.push_back({terms, bound});
    return out;
  }

 private:
  std::map<Terms, Rational> best_;
};

}  // namespace

EliminationOutcome fourier_motzkin(std::size_t variable_count, std::vector<LinearRow> input) {
  RowSet current;
  for (auto& row : input) {
    if (!current.add(std::move(row))) return {false, 0};
  }
  std::vector<char> eliminated(variable_count, 0);

  for (std::size_t stage = 1; stage <= variable_count; ++stage) {
    const std::vector<LinearRow> rows = current.rows();

    // Eliminate the variable that produces the fewest combinations.
    std::vector<std::size_t> pos_count(variable_count, 0);
    std::vector<std::size_t> neg_count(variable_count, 0);
    for (const LinearRow& r : rows) {
      for (const auto& [v, c] : r.terms) (c > Rational(0) ? pos_count : neg_count)[v]++;
    }
    std::size_t var = variable_count;
    for (std::size_t v = 0; v < variable_count; ++v) {
      if (eliminated[v]) continue;
      if (var == variable_count || pos_count[v] * neg_count[v] < pos_count[var] * neg_count[var]) var = v;
    }
    eliminated[var] = 1;

    RowSet next;
    std::vector<std::pair<const LinearRow*, Rational>> pos;
    std::vector<std::pair<const LinearRow*, Rational>> neg;
    for (const LinearRow& r : rows) {
      const auto c = coefficient(r, var);
      if (!c) {
        next.add(r);
      } else if (*c > Rational(0)) {
        pos.emplace_back(&r, *c);
      } else {
        neg.emplace_back(&r, *c);
      }
    }
    for (const auto& [p, cp] : pos) {
      for (const auto& [q, cq] : neg) {
        if (!next.add(combine(*p, cp, *q, cq, var))) return {false, stage};
      }
    }
    current = std::move(next);
  }
  return {true, variable_count};
}

}  // namespace dispersion

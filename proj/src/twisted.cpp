#include "arrtop/twisted.hpp"

#include "arrtop/real_geometry.hpp"

#include <algorithm>
#include <set>

namespace arrtop {

TauValue::TauValue(Scalar value) : value_(value.in_field(Field::QI)) {
  if (value_->is_zero()) throw std::invalid_argument("monodromy coefficient must be nonzero");
}

TauValue TauValue::parse(std::string_view text) {
  if (text == "generic") return generic();
  return TauValue(Scalar::parse(text, Field::QI));
}

std::string TauValue::to_string() const { return value_ ? value_->to_string() : "generic"; }

MonodromyData::MonodromyData(std::vector<TauValue> t) : tau(std::move(t)) {
  if (tau.empty()) throw std::invalid_argument("monodromy data needs at least one coefficient");
}

MonodromyData MonodromyData::parse(std::string_view list) {
  std::vector<TauValue> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string_view tok = list.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) throw ParseError("empty monodromy coefficient in list");
    out.push_back(TauValue::parse(tok));
    start = end + 1;
  }
  return MonodromyData(std::move(out));
}

TauValue MonodromyData::tau0() const {
  Scalar p = Scalar::one(Field::QI);
  for (const auto& t : tau) {
    if (t.is_generic()) return TauValue::generic();
    p *= *t.value();
  }
  return TauValue(p);
}

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TwistedPrediction resonance_generic(const MonodromyData& md, std::size_t n) {
  TwistedPrediction p;
  const long m = static_cast<long>(md.size());
  p.degree = static_cast<int>(n);
  p.dimension = binomial(m - 1, static_cast<long>(n));
  const bool some_nontrivial = std::any_of(md.tau.begin(), md.tau.end(), [](const TauValue& t) { return !t.is_one(); });
  const bool all_nontrivial = std::none_of(md.tau.begin(), md.tau.end(), [](const TauValue& t) { return t.is_one(); });
  p.applicable = some_nontrivial;
  p.canonical_map_bijective = all_nontrivial && !md.tau0().is_one();
  if (!some_nontrivial)
    p.reason = "generic arrangement: every tau_j equals 1";
  else
    p.reason = "generic arrangement with some tau_j != 1: homology concentrated in degree N";
  return p;
}

TwistedPrediction twisted_dim_normal_crossing(const Arrangement& arr, const MonodromyData& md) {
  TwistedPrediction p;
  p.degree = static_cast<int>(arr.ambient_dim());
  if (md.size() != arr.size()) throw std::invalid_argument("one monodromy coefficient per hyperplane is required");
  if (arr.field() != Field::Q || !arr.all_hyperplanes()) {
    p.reason = "not the complexification of a real hyperplane arrangement";
    return p;
  }
  if (!is_normal_crossings(arr)) {
    p.reason = "arrangement does not have normal crossings";
    return p;
  }
  if (std::any_of(md.tau.begin(), md.tau.end(), [](const TauValue& t) { return t.is_one(); })) {
    p.reason = "some tau_j equals 1";
    return p;
  }
  p.applicable = true;
  p.dimension = static_cast<long>(count_bounded(arr));
  p.reason = "complexified real normal crossings, all tau_j != 1: dimension is the bounded region count";
  return p;
}

HomologySummary one_dim_twisted_complex(const std::vector<Rational>& points, const MonodromyData& md) {
  if (points.size() != md.size()) throw std::invalid_argument("one monodromy coefficient per point is required");
  if (std::set<Rational>(points.begin(), points.end()).size() != points.size())
    throw std::invalid_argument("points must be distinct");
  const std::size_t m = points.size();
  // The 2-cell boundary is the 1 x m row (τ_j - 1); a formal τ contributes a nonzero entry.
  Matrix boundary(1, m, Field::QI);
  for (std::size_t j = 0; j < m; ++j)
    boundary(0, j) = md.tau[j].is_generic() ? Scalar::one(Field::QI) : *md.tau[j].value() - Scalar::one(Field::QI);
  const std::size_t r = rank(boundary);
  HomologySummary h;
  h.degrees[0] = {};
  h.degrees[1] = {m - r, {}};
  h.degrees[2] = {1 - r, {}};
  return h;
}

}  // namespace arrtop

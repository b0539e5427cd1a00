#pragma once

#include "arrtop/gm.hpp"
#include "arrtop/matroid.hpp"
#include "arrtop/real_geometry.hpp"
#include "arrtop/twisted.hpp"

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace arrtop {

struct PosetNodeReport {
  std::uint64_t generators = 0;
  std::size_t dim = 0;
  std::size_t codim = 0;
  long mobius = 0;
  std::size_t rank = 0;
  friend bool operator==(const PosetNodeReport&, const PosetNodeReport&) = default;
};

struct PosetReport {
  std::size_t ambient_dim = 0;
  Field field = Field::Q;
  std::vector<std::string> labels;
  std::vector<PosetNodeReport> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  friend bool operator==(const PosetReport&, const PosetReport&) = default;
};

PosetReport make_poset_report(const Arrangement& arr);

struct OSReport {
  /// True when the input was affine and the algebra was computed for its cone.
  bool coned = false;
  std::vector<long> dims;           // of the algebra actually computed
  std::vector<long> deconed_dims;   // Poincaré coefficients of the input complement
  std::vector<std::vector<std::size_t>> circuits;
  std::vector<std::vector<std::vector<std::size_t>>> basis;
  friend bool operator==(const OSReport&, const OSReport&) = default;
};

OSReport make_os_report(const Arrangement& arr);

struct RegionsReport {
  std::vector<Region> regions;
  std::size_t bounded = 0;
  friend bool operator==(const RegionsReport&, const RegionsReport&) = default;
};

RegionsReport make_regions_report(const Arrangement& arr);

struct GraphComplexReport {
  std::size_t n = 0;
  std::size_t k = 0;
  HomologySummary homology;
  friend bool operator==(const GraphComplexReport&, const GraphComplexReport&) = default;
};

struct TwistedReport {
  std::vector<TauValue> tau;
  std::optional<TwistedPrediction> generic;
  std::optional<TwistedPrediction> normal_crossing;
  std::optional<HomologySummary> one_dim;
  friend bool operator==(const TwistedReport&, const TwistedReport&) = default;
};

/// Every prediction whose hypotheses can be checked on this input.
TwistedReport make_twisted_report(const Arrangement& arr, const MonodromyData& md);

struct MatroidReport {
  RankFunction rank;
  std::vector<AxiomViolation> violations;
  friend bool operator==(const MatroidReport&, const MatroidReport&) = default;
};

struct CompareReport {
  std::string mode;  // "self" or "pair"
  bool equal = false;
  std::vector<long> left;
  std::vector<long> right;
  friend bool operator==(const CompareReport&, const CompareReport&) = default;
};

/// GM Betti numbers against Orlik–Solomon dimensions of the same input.
CompareReport compare_self(const Arrangement& arr, std::size_t max_faces = kDefaultMaxFaces);
CompareReport compare_pair(const Arrangement& a, const Arrangement& b);

using nlohmann::json;

void to_json(json& j, const GroupSummary& g);
void from_json(const json& j, GroupSummary& g);
void to_json(json& j, const HomologySummary& h);
void from_json(const json& j, HomologySummary& h);
void to_json(json& j, const PosetReport& r);
void from_json(const json& j, PosetReport& r);
void to_json(json& j, const GMReport& r);
void from_json(const json& j, GMReport& r);
void to_json(json& j, const WedgeSummary& w);
void from_json(const json& j, WedgeSummary& w);
void to_json(json& j, const OSReport& r);
void from_json(const json& j, OSReport& r);
void to_json(json& j, const RegionsReport& r);
void from_json(const json& j, RegionsReport& r);
void to_json(json& j, const SalvettiCensus& c);
void from_json(const json& j, SalvettiCensus& c);
void to_json(json& j, const ImaginaryWedgeCensus& c);
void from_json(const json& j, ImaginaryWedgeCensus& c);
void to_json(json& j, const GraphComplexReport& r);
void from_json(const json& j, GraphComplexReport& r);
void to_json(json& j, const TwistedPrediction& p);
void from_json(const json& j, TwistedPrediction& p);
void to_json(json& j, const TwistedReport& r);
void from_json(const json& j, TwistedReport& r);
void to_json(json& j, const RankFunction& r);
void from_json(const json& j, RankFunction& r);
void to_json(json& j, const MatroidReport& r);
void from_json(const json& j, MatroidReport& r);
void to_json(json& j, const MnevReport& r);
void from_json(const json& j, MnevReport& r);
void to_json(json& j, const CompareReport& r);
void from_json(const json& j, CompareReport& r);

}  // namespace arrtop

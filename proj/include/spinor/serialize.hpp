#pragma once

#include "spinor/analytic.hpp"
#include "spinor/cuspidality.hpp"
#include "spinor/hodge.hpp"
#include "spinor/lifting.hpp"
#include "spinor/local_factor.hpp"
#include "spinor/modforms.hpp"
#include "spinor/satake.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace spinor {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Big integers travel as decimal strings.
Json integer_to_json(const Integer& value);
Integer integer_from_json(const Json& j, const std::string& what);

// Complex numbers travel as [re, im].
Json complex_to_json(Complex z);

Json to_json(const EigenvalueRecord& record);
EigenvalueRecord record_from_json(const Json& j);

/// {"p","degree","rep","coeffs"}; numeric factors add "mode":"numeric" and
/// store each coefficient as [re, im].
Json to_json(const LocalFactor& factor);
LocalFactor local_factor_from_json(const Json& j);

Json to_json(const SatakeParams& sp);
Json to_json(const HodgeType& h);
Json to_json(const WeightTriple& w);
Json to_json(const WeightRejection& r);
Json to_json(const GammaProfile& g);
Json to_json(const CuspidalityReport& r);
Json to_json(const EulerProductResult& r);

struct Fixtures {
  modforms::FixtureConfig config;
  std::vector<EigenvalueRecord> records;

  // Throws InputError for an unknown label.
  const EigenvalueRecord& find(const std::string& label) const;
};

Json to_json(const Fixtures& fixtures);
Fixtures fixtures_from_json(const Json& j);

/// Deterministic text: identical config gives byte-identical output.
std::string dump_fixtures(const Fixtures& fixtures);
void write_fixtures(const std::filesystem::path& path, const Fixtures& fixtures);
/// Throws InputError when the file is missing or malformed.
Fixtures read_fixtures(const std::filesystem::path& path);

}  // namespace spinor

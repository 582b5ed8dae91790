#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "esomit/appendix.hpp"
#include "esomit/eigenspace.hpp"
#include "esomit/feasibility.hpp"
#include "esomit/presets.hpp"

namespace esomit::io {

using nlohmann::json;

/// Raised for unreadable inputs and unwritable outputs.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "key = value" lines; '#' starts a comment; blank lines ignored. Later
/// keys overwrite earlier ones.
RawParams parse_config(std::istream& in);
RawParams read_config_file(const std::string& path);

/// Splits "key=value"; throws Error{InvalidValue} without '='.
std::pair<std::string, std::string> split_assignment(const std::string& text);

/// Lossless text form of a parameter set (rates in rad/s, phases in pi
/// units) that build_system reads back to the same values.
RawParams to_raw(const SystemParams& p);
RawParams to_raw(const SystemParams& p, const Drive& d);

json to_json(const SystemParams& p);
json to_json(const Drive& d);
json to_json(const SteadyState& s);
json to_json(const Preset& p);
json to_json(const CrosscheckReport& r);
json to_json(const RangeReport& r);

struct EigenRow {
  double axis = 0.0;
  EigenSplit split;
  PhaseClass cls;
};

void write_spectrum_csv(std::ostream& out, const SpectrumTable& t);
json spectrum_json(const SpectrumTable& t);

void write_eigen_csv(std::ostream& out, const std::string& axis, const std::vector<EigenRow>& rows);
json eigen_json(const std::string& axis, const std::vector<EigenRow>& rows);

void write_sweep_csv(std::ostream& out, const std::string& axis, const std::vector<SweepPoint>& points);
json sweep_json(const std::string& axis, const std::vector<SweepPoint>& points);

void write_phase_sweep_csv(std::ostream& out, const std::vector<PhasePoint>& points);
json phase_sweep_json(const std::vector<PhasePoint>& points);

void write_crosscheck_csv(std::ostream& out, const CrosscheckReport& r);

}  // namespace esomit::io

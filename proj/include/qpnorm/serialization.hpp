#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qpnorm/channel.hpp"

namespace qpnorm {

/// Channel JSON schema:
/// {"dim_in": int, "dim_out": int, "trace_preserving": bool,
///  "kraus": [[[[re, im], ...per row], ...rows], ...operators]}
nlohmann::json channel_to_json(const Channel& phi);
Channel channel_from_json(const nlohmann::json& j);

Channel load_channel_file(const std::string& path);
void save_channel_file(const Channel& phi, const std::string& path);

/// Parsed "family:arg:..." map description. Arguments are positional
/// or name=value; vectors are comma-separated, matrices use ';'
/// between rows.
struct ZooSpec {
  std::string family;
  std::vector<std::string> positional;
  std::map<std::string, std::string> named;
  std::string raw;
};

ZooSpec parse_zoo_spec(const std::string& spec);

/// Builds the channel a spec describes. Families:
///   identity:d
///   werner-holevo:d
///   depolarizing:d:lambda
///   diagonal:a=1,.5;.5,1         or  diagonal:d=3:seed=7
///   qc:D=.2,.8;.8,.2             or  qc:d=3:seed=7
///   extreme:a=1,0;0,0
///   random:d_in:d_out:kraus:seed
///   qubit-canonical:t=0,0,.3:lambda=.5,.5,.4
///   form:D=...:a=...:eps=...
Channel build_zoo_channel(const ZooSpec& spec);

inline Channel channel_from_zoo_string(const std::string& spec) {
  return build_zoo_channel(parse_zoo_spec(spec));
}

}  // namespace qpnorm

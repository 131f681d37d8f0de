#include "qpnorm/serialization.hpp"

#include <fstream>
#include <sstream>

#include "qpnorm/conditions.hpp"
#include "qpnorm/random.hpp"
#include "qpnorm/zoo.hpp"

namespace qpnorm {

using nlohmann::json;

json channel_to_json(const Channel& phi) {
  json ops = json::array();
  for (const Matrix& k : phi.kraus()) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < k.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < k.cols(); ++j)
        row.push_back({k(i, j).real(), k(i, j).imag()});
      rows.push_back(std::move(row));
    }
    ops.push_back(std::move(rows));
  }
  return json{{"dim_in", phi.dim_in()},
              {"dim_out", phi.dim_out()},
              {"trace_preserving", phi.trace_preserving()},
              {"kraus", std::move(ops)}};
}

Channel channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim_in") || !j.contains("dim_out") || !j.contains("kraus"))
    throw std::invalid_argument("channel JSON: missing required fields");
  const auto d_in = j.at("dim_in").get<Eigen::Index>();
  const auto d_out = j.at("dim_out").get<Eigen::Index>();
  const bool tp = j.value("trace_preserving", false);
  if (d_in <= 0 || d_out <= 0) throw std::invalid_argument("channel JSON: invalid dimensions");
  std::vector<Matrix> kraus;
  for (const json& op : j.at("kraus")) {
    Matrix k(d_out, d_in);
    if (static_cast<Eigen::Index>(op.size()) != d_out)
      throw std::invalid_argument("channel JSON: Kraus row count mismatch");
    for (Eigen::Index r = 0; r < d_out; ++r) {
      const json& row = op.at(r);
      if (static_cast<Eigen::Index>(row.size()) != d_in)
        throw std::invalid_argument("channel JSON: Kraus column count mismatch");
      for (Eigen::Index c = 0; c < d_in; ++c) {
        const json& e = row.at(c);
        if (!e.is_array() || e.size() != 2)
          throw std::invalid_argument("channel JSON: entries must be [re, im] pairs");
        k(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
      }
    }
    kraus.push_back(std::move(k));
  }
  return Channel(std::move(kraus), tp);
}

Channel load_channel_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open channel file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("channel file parse error: ") + e.what());
  }
  return channel_from_json(j);
}

void save_channel_file(const Channel& phi, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write channel file: " + path);
  out << channel_to_json(phi).dump(2) << "\n";
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

double parse_double(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("zoo spec: bad number '" + s + "'");
  return v;
}

long parse_int(const std::string& s) {
  std::size_t pos = 0;
  const long v = std::stol(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("zoo spec: bad integer '" + s + "'");
  return v;
}

RealMatrix parse_matrix(const std::string& s) {
  const std::vector<std::string> rows = split(s, ';');
  const std::size_t ncols = split(rows.front(), ',').size();
  RealMatrix m(rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::vector<std::string> cells = split(rows[r], ',');
    if (cells.size() != ncols) throw std::invalid_argument("zoo spec: ragged matrix");
    for (std::size_t c = 0; c < ncols; ++c) m(r, c) = parse_double(cells[c]);
  }
  return m;
}

Vector3 parse_vec3(const std::string& s) {
  const std::vector<std::string> cells = split(s, ',');
  if (cells.size() != 3) throw std::invalid_argument("zoo spec: expected 3-vector");
  return Vector3(parse_double(cells[0]), parse_double(cells[1]), parse_double(cells[2]));
}

class Args {
 public:
  explicit Args(const ZooSpec& spec) : spec_(spec) {}

  std::string get(std::size_t pos, const std::string& name) const {
    if (auto it = spec_.named.find(name); it != spec_.named.end()) return it->second;
    if (pos < spec_.positional.size()) return spec_.positional[pos];
    throw std::invalid_argument("zoo spec '" + spec_.raw + "': missing argument '" + name + "'");
  }

  bool has(std::size_t pos, const std::string& name) const {
    return spec_.named.count(name) > 0 || pos < spec_.positional.size();
  }

 private:
  const ZooSpec& spec_;
};

// Random PSD matrix with unit diagonal: coefficients of a
// trace-preserving diagonal map.
Matrix random_correlation(Eigen::Index d, std::uint64_t seed) {
  Rng rng(seed);
  const Matrix g = ginibre(rng, d, d);
  Matrix a = g * g.adjoint();
  RealVector scale(d);
  for (Eigen::Index j = 0; j < d; ++j) scale(j) = 1.0 / std::sqrt(a(j, j).real());
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index k = 0; k < d; ++k) a(j, k) *= scale(j) * scale(k);
  return a;
}

RealMatrix random_column_stochastic(Eigen::Index d, std::uint64_t seed) {
  Rng rng(seed);
  RealMatrix m(d, d);
  for (Eigen::Index l = 0; l < d; ++l) {
    double col = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) {
      m(j, l) = -std::log(1.0 - rng.uniform());
      col += m(j, l);
    }
    m.col(l) /= col;
  }
  return m;
}

}  // namespace

ZooSpec parse_zoo_spec(const std::string& spec) {
  if (spec.empty()) throw std::invalid_argument("zoo spec: empty string");
  ZooSpec out;
  out.raw = spec;
  const std::vector<std::string> parts = split(spec, ':');
  out.family = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string::npos) {
      out.positional.push_back(parts[i]);
    } else {
      out.named[parts[i].substr(0, eq)] = parts[i].substr(eq + 1);
    }
  }
  return out;
}

Channel build_zoo_channel(const ZooSpec& spec) {
  const Args args(spec);
  const std::string& f = spec.family;
  if (f == "identity") return identity_channel(parse_int(args.get(0, "d")));
  if (f == "werner-holevo" || f == "werner_holevo")
    return werner_holevo(parse_int(args.get(0, "d")));
  if (f == "depolarizing")
    return depolarizing(parse_int(args.get(0, "d")), parse_double(args.get(1, "lambda")));
  if (f == "diagonal") {
    if (spec.named.count("a")) return diagonal_map(parse_matrix(args.get(0, "a")).cast<Complex>());
    return diagonal_map(random_correlation(parse_int(args.get(0, "d")),
                                           parse_int(args.get(1, "seed"))));
  }
  if (f == "qc") {
    if (spec.named.count("D")) return qc_map(parse_matrix(args.get(0, "D")));
    return qc_map(random_column_stochastic(parse_int(args.get(0, "d")),
                                           parse_int(args.get(1, "seed"))));
  }
  if (f == "extreme") return extreme_cp(parse_matrix(args.get(0, "a")).cast<Complex>());
  if (f == "random")
    return random_channel(parse_int(args.get(0, "d_in")), parse_int(args.get(1, "d_out")),
                          static_cast<int>(parse_int(args.get(2, "kraus"))),
                          static_cast<std::uint64_t>(parse_int(args.get(3, "seed"))));
  if (f == "qubit-canonical" || f == "qubit_canonical")
    return qubit_canonical(parse_vec3(args.get(0, "t")), parse_vec3(args.get(1, "lambda")));
  if (f == "form") {
    FormParams p;
    p.d_matrix = parse_matrix(args.get(0, "D"));
    p.a_offdiag = parse_matrix(args.get(1, "a")).cast<Complex>();
    p.epsilon = parse_matrix(args.get(2, "eps"));
    FormMapResult res = form_map(p);
    if (!res.channel)
      throw InvalidChannelError("zoo spec 'form': parameters are not CP (Choi min eigenvalue " +
                                std::to_string(res.choi_min_eigenvalue) + ")");
    return *std::move(res.channel);
  }
  throw std::invalid_argument("zoo spec: unknown family '" + f + "'");
}

}  // namespace qpnorm

#include "wallcross/io.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace wc::io {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw std::runtime_error("schema: " + what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) schema_error(std::string("missing field '") + name + "'");
  return j.at(name);
}

int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) schema_error(std::string("'") + name + "' must be an integer");
  return v.get<int>();
}

std::string string_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) schema_error(std::string("'") + name + "' must be a string");
  return v.get<std::string>();
}

json order_json(const std::vector<Partition>& order) {
  json a = json::array();
  for (const auto& p : order) a.push_back(partition_json(p));
  return a;
}

std::vector<Partition> order_from_json(const json& j, int n) {
  const json& a = field(j, "order");
  if (!a.is_array()) schema_error("'order' must be an array");
  std::vector<Partition> out;
  for (const auto& p : a) out.push_back(partition_from_json(p));
  if (out != partitions(n)) schema_error("'order' is not the canonical order of partitions of " + std::to_string(n));
  return out;
}

template <class T, class Show>
json entries_json(const std::vector<Partition>& order, const Matrix<T>& m, Show show) {
  json e = json::object();
  for (std::size_t r = 0; r < order.size(); ++r)
    for (std::size_t c = 0; c < order.size(); ++c)
      if (!m[r][c].is_zero()) e[entry_key(order[r], order[c])] = show(m[r][c]);
  return e;
}

Matrix<Scalar> entries_from_json(const json& j, const char* name, const std::vector<Partition>& order,
                                 const VarNames& names) {
  const json& e = field(j, name);
  if (!e.is_object()) schema_error(std::string("'") + name + "' must be an object");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i].to_string()] = i;
  Matrix<Scalar> m(order.size(), std::vector<Scalar>(order.size()));
  for (const auto& [key, value] : e.items()) {
    auto bar = key.find('|');
    if (bar == std::string::npos) schema_error("bad entry key '" + key + "'");
    auto r = index.find(key.substr(0, bar)), c = index.find(key.substr(bar + 1));
    if (r == index.end() || c == index.end()) schema_error("entry key '" + key + "' is not in the order");
    if (!value.is_string()) schema_error("entry '" + key + "' must be a string");
    try {
      m[r->second][c->second] = parse_scalar(value.get<std::string>(), names);
    } catch (const std::exception& ex) {
      schema_error("entry '" + key + "': " + ex.what());
    }
  }
  return m;
}

Matrix<LaurentPoly> laurent_entries(const Matrix<Scalar>& m) {
  Matrix<LaurentPoly> out(m.size(), std::vector<LaurentPoly>(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) {
      if (!m[r][c].is_laurent()) schema_error("entry is not a Laurent polynomial: " + m[r][c].to_string());
      out[r][c] = m[r][c].num();
    }
  return out;
}

json slope_json(const Rational& m, int side) {
  return json{{"num", m.get_num().get_str()}, {"den", m.get_den().get_str()}, {"side", side > 0 ? "+" : "-"}};
}

Rational rational_from_json(const json& s) {
  const json& num = field(s, "num");
  const json& den = field(s, "den");
  if (!num.is_string() || !den.is_string()) schema_error("slope num/den must be strings");
  try {
    Rational r(num.get<std::string>() + "/" + den.get<std::string>());
    if (r.get_den() == 0) schema_error("zero denominator");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    schema_error("bad slope");
  }
}

const VarNames kQT{"q", "t"};
const VarNames kQ12{"q1", "q2"};

std::string latex_exponent(const Exponent& e) {
  if (e.is_integer()) return std::to_string(e.num());
  return std::to_string(e.num()) + "/" + std::to_string(e.den());
}

std::string latex_var(const std::string& name, const Exponent& e) {
  if (e == Exponent(1)) return name;
  return name + "^{" + latex_exponent(e) + "}";
}

std::string latex_poly(const LaurentPoly& p, const VarNames& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = t.coeff < 0;
    Rational c = abs(t.coeff);
    std::string up, down;
    auto put = [](std::string& s, const std::string& f) { s += (s.empty() ? "" : " ") + f; };
    if (t.mono.q.sign() > 0) put(up, latex_var(names.first, t.mono.q));
    if (t.mono.t.sign() > 0) put(up, latex_var(names.second, t.mono.t));
    if (t.mono.q.sign() < 0) put(down, latex_var(names.first, -t.mono.q));
    if (t.mono.t.sign() < 0) put(down, latex_var(names.second, -t.mono.t));
    if (c.get_num() != 1 || up.empty()) up = c.get_num().get_str() + (up.empty() ? "" : " " + up);
    if (c.get_den() != 1) down = c.get_den().get_str() + (down.empty() ? "" : " " + down);
    std::string term = down.empty() ? up : "\\frac{" + up + "}{" + down + "}";
    if (first)
      out += negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

}  // namespace

json partition_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
  if (!j.is_array()) schema_error("partition must be an array");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<int>() <= 0) schema_error("partition parts must be positive integers");
    parts.push_back(x.get<int>());
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) schema_error("partition must be decreasing");
  return Partition(parts);
}

std::string entry_key(const Partition& row, const Partition& col) { return row.to_string() + "|" + col.to_string(); }

json to_json(const fock::BarMatrix& a) {
  return json{{"n", a.n},
              {"b", a.b},
              {"order", order_json(a.order)},
              {"entries", entries_json(a.order, a.a, [](const LaurentPoly& p) { return p.to_string(kQT); })}};
}

json to_json(const fock::CanonicalMatrix& d) {
  return json{{"n", d.n},
              {"b", d.b},
              {"sign", d.sign > 0 ? "+" : "-"},
              {"order", order_json(d.order)},
              {"entries", entries_json(d.order, d.d, [](const LaurentPoly& p) { return p.to_string(kQT); })}};
}

json to_json(const stable::StableTable& t) {
  return json{{"n", t.n},
              {"slope", slope_json(t.slope.m, t.slope.side)},
              {"order", order_json(t.order)},
              {"gamma", entries_json(t.order, t.gamma, [](const LaurentPoly& p) { return p.to_string(kQT); })}};
}

json to_json(const stable::WallCrossing& w) {
  return json{{"n", w.n},
              {"wall", {{"num", w.wall.get_num().get_str()}, {"den", w.wall.get_den().get_str()}}},
              {"order", order_json(w.order)},
              {"entries", entries_json(w.order, w.b, [](const LaurentPoly& p) { return p.to_string(kQT); })}};
}

json to_json(const sym::SymFunc& f, const VarNames& names) {
  json c = json::object();
  const auto& parts = partitions(f.degree());
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (!f.coeffs()[i].is_zero()) c[parts[i].to_string()] = f.coeffs()[i].to_string(names);
  return json{{"degree", f.degree()}, {"basis", sym::basis_name(f.basis())}, {"coeffs", c}};
}

json to_json(const verify::Report& r, bool timing) {
  json j{{"check", r.check}, {"params", r.params}, {"status", verify::status_name(r.status)}};
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (timing && r.millis) j["millis"] = *r.millis;
  return j;
}

fock::BarMatrix bar_matrix_from_json(const json& j) {
  fock::BarMatrix a;
  a.n = int_field(j, "n");
  a.b = int_field(j, "b");
  if (a.n < 0 || a.b < 1) schema_error("bad n or b");
  a.order = order_from_json(j, a.n);
  a.a = laurent_entries(entries_from_json(j, "entries", a.order, kQT));
  return a;
}

fock::CanonicalMatrix canonical_from_json(const json& j) {
  fock::CanonicalMatrix d;
  d.n = int_field(j, "n");
  d.b = int_field(j, "b");
  if (d.n < 0 || d.b < 1) schema_error("bad n or b");
  std::string sign = string_field(j, "sign");
  if (sign != "+" && sign != "-") schema_error("sign must be + or -");
  d.sign = sign == "+" ? 1 : -1;
  d.order = order_from_json(j, d.n);
  d.d = laurent_entries(entries_from_json(j, "entries", d.order, kQT));
  return d;
}

stable::StableTable table_from_json(const json& j) {
  stable::StableTable t;
  t.n = int_field(j, "n");
  if (t.n < 0) schema_error("bad n");
  const json& s = field(j, "slope");
  std::string side = string_field(s, "side");
  if (side != "+" && side != "-") schema_error("side must be + or -");
  t.slope = stable::SlopePoint{rational_from_json(s), side == "+" ? 1 : -1};
  t.order = order_from_json(j, t.n);
  t.gamma = laurent_entries(entries_from_json(j, "gamma", t.order, kQT));
  return t;
}

stable::WallCrossing crossing_from_json(const json& j) {
  stable::WallCrossing w;
  w.n = int_field(j, "n");
  if (w.n < 0) schema_error("bad n");
  w.wall = rational_from_json(field(j, "wall"));
  w.order = order_from_json(j, w.n);
  w.b = laurent_entries(entries_from_json(j, "entries", w.order, kQT));
  return w;
}

sym::SymFunc symfunc_from_json(const json& j, const VarNames& names) {
  int degree = int_field(j, "degree");
  if (degree < 0) schema_error("bad degree");
  sym::SymFunc f(degree, sym::parse_basis(string_field(j, "basis")));
  const json& c = field(j, "coeffs");
  if (!c.is_object()) schema_error("'coeffs' must be an object");
  for (const auto& [key, value] : c.items()) {
    Partition p = Partition::parse(key);
    if (p.size() != degree) schema_error("coefficient key '" + key + "' has the wrong size");
    if (!value.is_string()) schema_error("coefficient '" + key + "' must be a string");
    f.coeff(p) = parse_scalar(value.get<std::string>(), names);
  }
  return f;
}

verify::Report report_from_json(const json& j) {
  verify::Report r;
  r.check = string_field(j, "check");
  const json& p = field(j, "params");
  if (!p.is_object()) schema_error("'params' must be an object");
  for (const auto& [k, v] : p.items()) {
    if (!v.is_string()) schema_error("params must be strings");
    r.params[k] = v.get<std::string>();
  }
  std::string s = string_field(j, "status");
  if (s == "match")
    r.status = verify::Status::Match;
  else if (s == "mismatch")
    r.status = verify::Status::Mismatch;
  else if (s == "skipped")
    r.status = verify::Status::Skipped;
  else
    schema_error("unknown status '" + s + "'");
  if (j.contains("witness")) r.witness = string_field(j, "witness");
  if (j.contains("millis")) r.millis = field(j, "millis").get<long>();
  return r;
}

std::string latex(const Scalar& x, const VarNames& names) {
  if (x.is_laurent()) return latex_poly(x.num(), names);
  // clear negative exponents from numerator and denominator together
  Exponent mq = 0, mt = 0;
  for (const auto* p : {&x.num(), &x.den()})
    for (const auto& t : p->terms()) {
      mq = std::min(mq, t.mono.q);
      mt = std::min(mt, t.mono.t);
    }
  Monomial shift{-mq, -mt};
  return "\\frac{" + latex_poly(x.num().shifted(shift), names) + "}{" + latex_poly(x.den().shifted(shift), names) +
         "}";
}

std::string latex_matrix(const Matrix<Scalar>& m, const VarNames& names) {
  std::string out = "\\begin{pmatrix}\n";
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) out += (c ? " & " : "") + latex(m[r][c], names);
    out += r + 1 < m.size() ? " \\\\\n" : "\n";
  }
  return out + "\\end{pmatrix}";
}

std::string latex_symfunc(const sym::SymFunc& f, const VarNames& names) {
  static const std::map<sym::Basis, std::string> symbol{{sym::Basis::m, "m"},         {sym::Basis::e, "e"},
                                                        {sym::Basis::p, "p"},         {sym::Basis::s, "s"},
                                                        {sym::Basis::P, "P"},         {sym::Basis::Htilde, "\\widetilde{H}"}};
  const auto& parts = partitions(f.degree());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Scalar& c = f.coeffs()[i];
    if (c.is_zero()) continue;
    std::string sub;
    for (int x : parts[i].parts()) sub += (sub.empty() ? "" : ",") + std::to_string(x);
    std::string coeff = c.is_one() ? "" : c.is_laurent() && c.num().is_monomial() ? latex(c, names) + " " : "\\left(" + latex(c, names) + "\\right) ";
    out += (out.empty() ? "" : " + ") + coeff + symbol.at(f.basis()) + "_{" + sub + "}";
  }
  return out.empty() ? "0" : out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string csv_matrix(const std::vector<Partition>& order, const Matrix<Scalar>& m, const VarNames& names) {
  std::string out = "row,col,value\n";
  for (std::size_t r = 0; r < order.size(); ++r)
    for (std::size_t c = 0; c < order.size(); ++c)
      if (!m[r][c].is_zero())
        out += csv_field(order[r].to_string()) + "," + csv_field(order[c].to_string()) + "," +
               csv_field(m[r][c].to_string(names)) + "\n";
  return out;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

Cache::Cache(std::optional<fs::path> dir) : dir_(std::move(dir)) {
  if (dir_ && dir_->empty()) dir_.reset();
}

std::optional<fs::path> Cache::default_dir() {
  const char* env = std::getenv("WALLCROSS_CACHE");
  if (!env || !*env) return std::nullopt;
  return fs::path(env);
}

fs::path Cache::path_for(const std::string& key) const {
  if (!dir_) throw std::logic_error("cache disabled");
  return *dir_ / (sha256_hex(key) + ".json");
}

std::optional<json> Cache::load(const std::string& key) const {
  if (!dir_) return std::nullopt;
  fs::path path = path_for(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  auto corrupt = [&](const std::string& why) -> std::optional<json> {
    std::cerr << "warning: cache entry " << path.string() << " is corrupt (" << why << "); recomputing\n";
    return std::nullopt;
  };
  json entry;
  try {
    entry = json::parse(in);
  } catch (const json::exception&) {
    return corrupt("unreadable JSON");
  }
  if (!entry.is_object() || !entry.contains("schema") || !entry["schema"].is_number_integer())
    return corrupt("no schema version");
  if (entry["schema"].get<int>() != kSchemaVersion) return std::nullopt;
  if (!entry.contains("key") || entry["key"] != key) return corrupt("key mismatch");
  if (!entry.contains("payload") || !entry.contains("checksum") || !entry["checksum"].is_string())
    return corrupt("missing payload or checksum");
  if (sha256_hex(entry["payload"].dump()) != entry["checksum"].get<std::string>()) return corrupt("checksum mismatch");
  return entry["payload"];
}

void Cache::store(const std::string& key, const json& payload) const {
  if (!dir_) return;
  fs::create_directories(*dir_);
  json entry{{"schema", kSchemaVersion}, {"key", key}, {"checksum", sha256_hex(payload.dump())}, {"payload", payload}};
  fs::path path = path_for(key);
  std::random_device rd;
  fs::path tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << entry.dump() << '\n';
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, path);
}

json Cache::fetch(const std::string& key, const std::function<json()>& compute,
                  const std::function<std::string(const json&)>& valid) const {
  if (auto hit = load(key)) {
    std::string why;
    try {
      why = valid(*hit);
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (why.empty()) return *hit;
    std::cerr << "warning: cache entry " << path_for(key).string() << " fails validation (" << why
              << "); recomputing\n";
  }
  json fresh = compute();
  store(key, fresh);
  return fresh;
}

std::string bar_key(int n, int b) { return "fock-bar/n=" + std::to_string(n) + "/b=" + std::to_string(b); }

std::string table_key(int n, const stable::SlopePoint& slope) {
  return "stable/n=" + std::to_string(n) + "/slope=" + slope.to_string();
}

std::string crossing_key(int n, const Rational& wall) {
  return "wallcross/n=" + std::to_string(n) + "/wall=" + to_string(wall);
}

}  // namespace wc::io

#pragma once

#include "wallcross/fock.hpp"
#include "wallcross/stable.hpp"
#include "wallcross/symfunc.hpp"
#include "wallcross/verify.hpp"

#include "json.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

// Serialization of computed objects (JSON, CSV, LaTeX) and the on-disk cache.
// Laurent entries of Fock matrices are in q; stable tables and wall crossings
// are in q, t (q1 = q t, q2 = q / t); symmetric functions are in q1, q2,
// except Verma characters, which are in the single grading variable t.
namespace wc::io {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

json partition_json(const Partition& p);
Partition partition_from_json(const json& j);
std::string entry_key(const Partition& row, const Partition& col);

json to_json(const fock::BarMatrix& a);
json to_json(const fock::CanonicalMatrix& d);
json to_json(const stable::StableTable& t);
json to_json(const stable::WallCrossing& w);
json to_json(const sym::SymFunc& f, const VarNames& names = {"q1", "q2"});
json to_json(const verify::Report& r, bool timing);

fock::BarMatrix bar_matrix_from_json(const json& j);
fock::CanonicalMatrix canonical_from_json(const json& j);
stable::StableTable table_from_json(const json& j);
stable::WallCrossing crossing_from_json(const json& j);
sym::SymFunc symfunc_from_json(const json& j, const VarNames& names = {"q1", "q2"});
verify::Report report_from_json(const json& j);

// Matrix entries as LaTeX; `names` are the LaTeX variable names.
std::string latex(const Scalar& x, const VarNames& names = {"q_1", "q_2"});
std::string latex_matrix(const Matrix<Scalar>& m, const VarNames& names = {"q_1", "q_2"});
std::string latex_symfunc(const sym::SymFunc& f, const VarNames& names = {"q_1", "q_2"});

// One "row,col,value" line per nonzero entry, after a header.
std::string csv_matrix(const std::vector<Partition>& order, const Matrix<Scalar>& m, const VarNames& names = {});
std::string csv_field(const std::string& s);

std::string sha256_hex(const std::string& data);

// Content-addressed JSON cache. Entries carry the schema version and a
// checksum of the payload; writes go through a temporary file and rename.
class Cache {
 public:
  // Disabled when dir is empty.
  explicit Cache(std::optional<std::filesystem::path> dir);
  // WALLCROSS_CACHE, or nullopt.
  static std::optional<std::filesystem::path> default_dir();

  bool enabled() const { return dir_.has_value(); }
  std::filesystem::path path_for(const std::string& key) const;

  // nullopt on a miss, a stale schema, or a corrupt entry (warned on stderr).
  std::optional<json> load(const std::string& key) const;
  void store(const std::string& key, const json& payload) const;

  // Load, check with `valid` (which returns an empty string when the payload
  // is fine), or compute and store.
  json fetch(const std::string& key, const std::function<json()>& compute,
             const std::function<std::string(const json&)>& valid) const;

 private:
  std::optional<std::filesystem::path> dir_;
};

std::string bar_key(int n, int b);
std::string table_key(int n, const stable::SlopePoint& slope);
std::string crossing_key(int n, const Rational& wall);

}  // namespace wc::io

#include "wallcross/io.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <iostream>
#include <stdexcept>

using namespace wc;
using io::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = -1;
  int b = -1;
  std::string slope;
  std::string side = "+";
  int order = 8;
  std::string format = "json";
  std::string cache_dir;
  bool no_cache = false;
  int jobs = 1;
  bool timing = false;
  bool renormalized = false;
};

const VarNames kQT{"q", "t"};
const VarNames kQ12{"q1", "q2"};
const VarNames kT{"t", "u"};

Rational slope_value(const Options& o) {
  if (o.slope.empty()) throw UsageError("--slope is required");
  try {
    return parse_rational(o.slope);
  } catch (const std::exception&) {
    throw UsageError("--slope must be a rational a/b, got '" + o.slope + "'");
  }
}

stable::SlopePoint slope_point(const Options& o) { return {slope_value(o), o.side == "+" ? 1 : -1}; }

void require_n(const Options& o) {
  if (o.n < 0) throw UsageError("--n is required and must be nonnegative");
}

void require_b(const Options& o) {
  if (o.b < 1) throw UsageError("--b is required and must be positive");
}

void reject_latex(const Options& o) {
  if (o.format == "latex") throw UsageError("LaTeX output is only available for matrices and symmetric functions");
}

io::Cache make_cache(const Options& o) {
  if (o.no_cache) return io::Cache(std::nullopt);
  if (!o.cache_dir.empty()) return io::Cache(std::filesystem::path(o.cache_dir));
  return io::Cache(io::Cache::default_dir());
}

Matrix<Scalar> scalars(const Matrix<LaurentPoly>& m, bool to_q12) {
  Matrix<Scalar> out(m.size(), std::vector<Scalar>(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c)
      out[r][c] = to_q12 ? change_coordinates(Scalar(m[r][c]), Coords::QT, Coords::Q1Q2) : Scalar(m[r][c]);
  return out;
}

std::string latex_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  std::string sign = r < 0 ? "-" : "";
  return sign + "\\frac{" + mpz_class(abs(r.get_num())).get_str() + "}{" + r.get_den().get_str() + "}";
}

fock::BarMatrix cached_bar_matrix(const Options& o, const io::Cache& cache) {
  json j = cache.fetch(
      io::bar_key(o.n, o.b), [&] { return io::to_json(fock::bar_matrix(o.n, o.b)); },
      [&](const json& p) -> std::string {
        auto a = io::bar_matrix_from_json(p);
        if (a.n != o.n || a.b != o.b) return "wrong n or b";
        return fock::lt_property_check(a).ok() ? "" : "triangularity check failed";
      });
  return io::bar_matrix_from_json(j);
}

stable::StableTable cached_table(int n, const stable::SlopePoint& s, const io::Cache& cache) {
  json j = cache.fetch(
      io::table_key(n, s), [&] { return io::to_json(stable::stable_basis(n, s)); },
      [&](const json& p) -> std::string {
        auto t = io::table_from_json(p);
        if (t.n != n || !(t.slope == s)) return "wrong n or slope";
        auto v = stable::validate(t);
        return v.empty() ? "" : v.front();
      });
  return io::table_from_json(j);
}

stable::WallCrossing cached_crossing(int n, const Rational& w, const io::Cache& cache) {
  json j = cache.fetch(
      io::crossing_key(n, w), [&] { return io::to_json(stable::wall_crossing(n, w)); },
      [&](const json& p) -> std::string {
        auto x = io::crossing_from_json(p);
        if (x.n != n || x.wall != w) return "wrong n or wall";
        for (std::size_t r = 0; r < x.b.size(); ++r)
          for (std::size_t c = r; c < x.b.size(); ++c)
            if (!(x.b[r][c] == (r == c ? LaurentPoly(1) : LaurentPoly()))) return "not unit lower triangular";
        return "";
      });
  return io::crossing_from_json(j);
}

std::string matrix_output(const Options& o, const json& j, const std::vector<Partition>& order,
                          const Matrix<LaurentPoly>& m, bool latex_in_q12, const std::string& latex_suffix = "") {
  if (o.format == "json") return j.dump(2);
  if (o.format == "csv") return io::csv_matrix(order, scalars(m, false), kQT);
  VarNames names = latex_in_q12 ? VarNames{"q_1", "q_2"} : VarNames{"q", "t"};
  return io::latex_matrix(scalars(m, latex_in_q12), names) + latex_suffix;
}

std::string symfunc_csv_rows(const std::string& label, const sym::SymFunc& f, const VarNames& names = kQ12) {
  std::string out;
  const auto& parts = partitions(f.degree());
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (!f.coeffs()[i].is_zero())
      out += io::csv_field(label) + "," + sym::basis_name(f.basis()) + "," + io::csv_field(parts[i].to_string()) +
             "," + io::csv_field(f.coeffs()[i].to_string(names)) + "\n";
  return out;
}

std::string reports_output(const Options& o, const std::vector<verify::Report>& reports) {
  if (o.format == "json") {
    json a = json::array();
    for (const auto& r : reports) a.push_back(io::to_json(r, o.timing));
    return a.dump(2);
  }
  std::string out = o.timing ? "check,params,status,witness,millis\n" : "check,params,status,witness\n";
  for (const auto& r : reports) {
    std::string params;
    for (const auto& [k, v] : r.params) params += (params.empty() ? "" : ";") + k + "=" + v;
    out += io::csv_field(r.check) + "," + io::csv_field(params) + "," + verify::status_name(r.status) + "," +
           io::csv_field(r.witness);
    if (o.timing) out += "," + (r.millis ? std::to_string(*r.millis) : std::string());
    out += "\n";
  }
  return out;
}

template <class F>
verify::Report timed(F f) {
  auto start = std::chrono::steady_clock::now();
  verify::Report r = f();
  auto end = std::chrono::steady_clock::now();
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
  return r;
}

int emit(const std::string& s) {
  std::cout << s;
  if (s.empty() || s.back() != '\n') std::cout << '\n';
  return 0;
}

int run_macdonald(const Options& o) {
  require_n(o);
  json funcs = json::object();
  std::string csv = "function,basis,partition,coefficient\n", tex;
  for (const auto& lambda : partitions(o.n)) {
    sym::SymFunc h = sym::convert(sym::modified_macdonald(lambda), sym::Basis::s);
    funcs[lambda.to_string()] = io::to_json(h);
    csv += symfunc_csv_rows("H~" + lambda.to_string(), h);
    tex += "\\widetilde{H}_{" + lambda.to_string() + "} = " + io::latex_symfunc(h) + "\n";
  }
  if (o.format == "csv") return emit(csv);
  if (o.format == "latex") return emit(tex);
  return emit(json{{"n", o.n}, {"functions", funcs}}.dump(2));
}

int run_fock_bar(const Options& o) {
  require_n(o);
  require_b(o);
  auto a = cached_bar_matrix(o, make_cache(o));
  return emit(matrix_output(o, io::to_json(a), a.order, a.a, false));
}

int run_canonical(const Options& o) {
  require_n(o);
  require_b(o);
  auto d = fock::canonical_basis(cached_bar_matrix(o, make_cache(o)), o.side == "+" ? 1 : -1);
  return emit(matrix_output(o, io::to_json(d), d.order, d.d, false));
}

int run_stable(const Options& o) {
  require_n(o);
  auto t = cached_table(o.n, slope_point(o), make_cache(o));
  return emit(matrix_output(o, io::to_json(t), t.order, t.gamma, true));
}

int run_wallcross(const Options& o) {
  require_n(o);
  Rational w = slope_value(o);
  auto x = cached_crossing(o.n, w, make_cache(o));
  std::string suffix = "_{" + latex_rational(w) + "}";
  if (!o.renormalized) return emit(matrix_output(o, io::to_json(x), x.order, x.b, true, suffix));
  stable::WallCrossing r = x;
  r.b = stable::renormalize(x);
  json j = io::to_json(r);
  j["renormalized"] = true;
  return emit(matrix_output(o, j, r.order, r.b, false, suffix));
}

int run_conjecture(const Options& o) {
  require_n(o);
  reject_latex(o);
  auto walls = stable::candidate_walls(o.n, 0, 1);
  std::vector<verify::Report> reports(walls.size());
  verify::parallel_for(walls.size(), o.jobs, [&](std::size_t i) {
    reports[i] = timed([&] { return verify::conjecture_check(o.n, walls[i]); });
  });
  emit(reports_output(o, reports));
  bool backed = o.n <= 3;
  for (const auto& r : reports)
    if (!r.ok() && backed) return 1;
  return 0;
}

int run_appendix(const Options& o) {
  reject_latex(o);
  std::vector<verify::Report> reports = verify::appendix_items();
  emit(reports_output(o, reports));
  for (const auto& r : reports)
    if (!r.ok()) return 1;
  return 0;
}

int run_positivity(const Options& o) {
  require_n(o);
  reject_latex(o);
  if (o.order < 0) throw UsageError("--order must be nonnegative");
  auto s = slope_point(o);
  auto r = timed([&] { return verify::positivity_report(o.n, s, o.order); });
  return emit(reports_output(o, {r}));
}

int run_characters(const Options& o) {
  Rational m = slope_value(o);
  if (m <= 0) throw UsageError("--slope must be positive");
  verify::Character c = verify::finite_dim_class(m);
  std::string name = "L_{" + latex_rational(m) + "}";
  json j{{"slope", {{"num", m.get_num().get_str()}, {"den", m.get_den().get_str()}}},
         {"raw", io::to_json(c.raw)},
         {"normalized", io::to_json(c.normalized)}};
  std::string csv = "function,basis,partition,coefficient\n" + symfunc_csv_rows("raw", c.raw) +
                    symfunc_csv_rows("normalized", c.normalized);
  std::string tex = "[" + name + "] = " + io::latex_symfunc(c.normalized) + "\n";
  if (o.n >= 0) {
    json verma = json::object();
    for (const auto& lambda : partitions(o.n)) {
      sym::SymFunc v = verify::verma_character(m, lambda);
      verma[lambda.to_string()] = io::to_json(v, kT);
      csv += symfunc_csv_rows("verma" + lambda.to_string(), v, kT);
      tex += "\\mathrm{ch}\\, M_{" + latex_rational(m) + "}(" + lambda.to_string() + ") = " + io::latex_symfunc(v, {"t", "u"}) +
             "\n";
    }
    j["verma"] = verma;
  }
  if (o.format == "csv") return emit(csv);
  if (o.format == "latex") return emit(tex);
  return emit(j.dump(2));
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "size of the partitions");
  sub->add_option("--b", o.b, "ribbon length");
  sub->add_option("--slope", o.slope, "slope or wall a/b");
  sub->add_option("--side", o.side, "side of the slope: + or -")->check(CLI::IsMember({"+", "-"}));
  sub->add_option("--order", o.order, "series truncation order");
  sub->add_option("--format", o.format, "json, csv or latex")->check(CLI::IsMember({"json", "csv", "latex"}));
  sub->add_option("--cache-dir", o.cache_dir, "cache directory (default $WALLCROSS_CACHE)");
  sub->add_flag("--no-cache", o.no_cache, "neither read nor write the cache");
  sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  sub->add_flag("--timing", o.timing, "include timings in reports");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable bases, wall-crossing and the q-Fock space"};
  app.require_subcommand(1);
  Options o;
  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Command commands[] = {
      {"macdonald", "modified Macdonald polynomials in the Schur basis", run_macdonald},
      {"fock-bar", "bar involution matrix A_b(q) on the degree-n Fock space", run_fock_bar},
      {"canonical", "canonical basis matrix (--side selects + or -)", run_canonical},
      {"stable", "stable basis restriction table at a slope", run_stable},
      {"wallcross", "wall-crossing matrix at the wall --slope", run_wallcross},
      {"conjecture-check", "compare renormalized wall-crossings with bar matrices", run_conjecture},
      {"appendix-check", "reproduce the tables for two and three points", run_appendix},
      {"positivity", "sign check of series-expanded Schur coefficients", run_positivity},
      {"characters", "finite-dimensional and Verma characters at a slope", run_characters},
  };
  std::map<CLI::App*, const Command*> dispatch;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, o);
    if (std::string(c.name) == "wallcross") sub->add_flag("--renormalized", o.renormalized, "conjugate to q-only entries");
    dispatch[sub] = &c;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  const Command* cmd = nullptr;
  for (auto* sub : app.get_subcommands()) cmd = dispatch.at(sub);
  try {
    return cmd->run(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

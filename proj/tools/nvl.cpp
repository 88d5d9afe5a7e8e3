// Command-line front end: JSON in, JSON out; census writes CSV.

#include "nvl/census.hpp"
#include "nvl/errors.hpp"
#include "nvl/json_io.hpp"
#include "nvl/normal_forms.hpp"
#include "nvl/s_variety.hpp"
#include "nvl/slices.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace nvl;

namespace {

Json read_json(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open " + path);
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw PreconditionError(std::string("invalid JSON: ") + e.what());
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Variety pick_variety(const std::string& flag, const Json& j) {
  if (!flag.empty()) return parse_variety(flag);
  return variety_of(j);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on almost-commuting nilpotent pairs"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string variety;

  auto* census = app.add_subcommand("census", "Enumerate N(F_q) or S(F_q) and write counts as CSV");
  std::size_t cn = 0;
  std::uint64_t cq = 0;
  bool stratified = false;
  unsigned threads = 0;
  std::string out_path;
  census->add_option("--variety", variety, "N or S")->required();
  census->add_option("--n", cn, "matrix size (1..3)")->required();
  census->add_option("--q", cq, "prime field size")->required();
  census->add_flag("--stratified", stratified, "split counts by (r, s)");
  census->add_option("--threads", threads, "worker threads (0 = hardware)");
  census->add_option("--out", out_path, "CSV path (stdout if omitted)");

  auto* slope = app.add_subcommand("slope", "Fit log(count) against log(q) for matching CSV rows");
  std::string csv_path;
  std::string filter;
  slope->add_option("--csv", csv_path, "census CSV")->required();
  slope->add_option("--filter", filter, "e.g. \"n=3,variety=N,r=1,s=1\"");

  auto* pairs = app.add_subcommand("pairs", "Count commuting nilpotent pairs over F_q");
  std::size_t pn = 0;
  std::uint64_t pq = 0;
  pairs->add_option("--n", pn)->required();
  pairs->add_option("--q", pq)->required();

  auto* classify_cmd = app.add_subcommand("classify", "Stratum of a quadruple");
  classify_cmd->add_option("--in", input, "quadruple JSON (- for stdin)");
  classify_cmd->add_option("--variety", variety, "N or S (overrides the JSON tag)");

  auto* psi_cmd = app.add_subcommand("psi", "Psi image of a point of N_{t,n-1-t}");
  psi_cmd->add_option("--in", input);

  auto* canonical_cmd = app.add_subcommand("canonical", "Canonical quadruple from orbit parameters");
  canonical_cmd->add_option("--in", input);

  auto* stab_cmd = app.add_subcommand("stabdim", "Linearized stabilizer");
  stab_cmd->add_option("--in", input);
  stab_cmd->add_option("--variety", variety);

  auto* orbit_cmd = app.add_subcommand("orbit-eq", "Decide whether two quadruples share an orbit");
  std::string path_a;
  std::string path_b;
  orbit_cmd->add_option("--a", path_a)->required();
  orbit_cmd->add_option("--b", path_b)->required();

  auto* slice_cmd = app.add_subcommand("slice", "Build a slice point (SliceData or RegularSliceParams)");
  bool regular = false;
  slice_cmd->add_option("--in", input);
  slice_cmd->add_flag("--regular", regular, "force the regular-slice schema");

  auto* tri_cmd = app.add_subcommand("triangularize", "Simultaneous triangularizing basis");
  bool adapted = false;
  tri_cmd->add_option("--in", input);
  tri_cmd->add_option("--variety", variety);
  tri_cmd->add_flag("--adapted", adapted, "N only: basis with e_r = i and e*_{n+1-s} = j");

  auto* deform_cmd = app.add_subcommand("deform", "Point on the tau-curve of a point of S");
  std::string tau = "1/2";
  std::optional<std::size_t> deform_r;
  deform_cmd->add_option("--in", input);
  deform_cmd->add_option("--tau", tau);
  deform_cmd->add_option("--r", deform_r);

  auto* jump_cmd = app.add_subcommand("jump", "Stratum-jump sample from a point with 0 < r+s < n-1");
  std::uint64_t seed = 1;
  jump_cmd->add_option("--in", input);
  jump_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*census) {
      Variety v = parse_variety(variety);
      auto recs = v == Variety::N ? enumerate_N(cn, cq, stratified, threads) : enumerate_S(cn, cq, stratified, threads);
      if (out_path.empty()) {
        write_csv(std::cout, recs);
      } else {
        std::ofstream out(out_path);
        if (!out) throw PreconditionError("cannot write " + out_path);
        write_csv(out, recs);
      }
    } else if (*slope) {
      std::ifstream in(csv_path);
      if (!in) throw PreconditionError("cannot open " + csv_path);
      auto est = dimension_slope(totals_by_q(read_csv(in), RecordFilter::parse(filter)));
      Json pts = Json::array();
      for (const auto& [q, c] : est.points) pts.push_back({{"q", q}, {"count", c.get_str()}});
      emit({{"points", pts}, {"slope", est.slope_text}, {"residuals", est.residuals}});
    } else if (*pairs) {
      emit({{"n", pn}, {"q", pq}, {"commuting_nilpotent_pairs", count_commuting_nilpotent_pairs(pn, pq).get_str()}});
    } else if (*classify_cmd) {
      Json j = read_json(input);
      Quadruple q = quadruple_from_json(j);
      if (pick_variety(variety, j) == Variety::S) {
        emit(to_json(classify_S(q)));
      } else {
        emit(to_json(classify(q)));
      }
    } else if (*psi_cmd) {
      emit(to_json(psi(quadruple_from_json(read_json(input)))));
    } else if (*canonical_cmd) {
      emit(to_json(canonical_quadruple(canonical_params_from_json(read_json(input)))));
    } else if (*stab_cmd) {
      Json j = read_json(input);
      Quadruple q = quadruple_from_json(j);
      if (pick_variety(variety, j) == Variety::S) {
        if (!is_in_S(q)) throw PreconditionError("stabdim: quadruple is not in S");
        emit(to_json(stabilizer(q)));
      } else {
        emit(to_json(stabilizer_dim(q)));
      }
    } else if (*orbit_cmd) {
      auto res = orbit_equivalent(quadruple_from_json(read_json(path_a)), quadruple_from_json(read_json(path_b)));
      emit({{"equivalent", res.equivalent}, {"conjugator", res.conjugator ? to_json(*res.conjugator) : Json(nullptr)}});
    } else if (*slice_cmd) {
      Json j = read_json(input);
      if (regular || j.contains("alpha_rows")) {
        emit(to_json(regular_slice_point(regular_slice_params_from_json(j))));
      } else {
        emit(to_json(build_slice_point(slice_data_from_json(j))));
      }
    } else if (*tri_cmd) {
      Json j = read_json(input);
      Quadruple q = quadruple_from_json(j);
      Matrix g = pick_variety(variety, j) == Variety::S ? triangularize_S(q)
                 : adapted                               ? adapted_basis(q)
                                                         : triangularize_pair(q);
      emit({{"G", to_json(g)}});
    } else if (*deform_cmd) {
      Json j = read_json(input);
      Quadruple q = quadruple_from_json(j);
      emit(to_json(s_deform(q, q.field.parse(tau), deform_r), Variety::S));
    } else if (*jump_cmd) {
      auto sample = stratum_jump_sample(quadruple_from_json(read_json(input)), seed);
      emit({{"point", to_json(sample.point)}, {"t", sample.t}, {"seed", sample.seed_used}});
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

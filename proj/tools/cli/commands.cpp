#include "cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "phasecomp/completion.hpp"
#include "phasecomp/decomposition.hpp"
#include "phasecomp/errors.hpp"
#include "phasecomp/phases.hpp"

namespace phasecomp::cli {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

double angle_out(double rad, const Options& opt) {
  return opt.degrees ? rad * kRadToDeg : rad;
}

Json one_based(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x + 1);
  return a;
}

Json interval_json(const PhaseInterval& iv, const Options& opt) {
  return Json{{"phi_min", angle_out(iv.phi_min, opt)},
              {"phi_max", angle_out(iv.phi_max, opt)}};
}

PhaseSector sector_from(const Options& opt) {
  if (!opt.alpha || !opt.beta) {
    throw InvalidArgument("this command needs both --alpha and --beta");
  }
  const double scale = opt.degrees ? 1.0 / kRadToDeg : 1.0;
  return PhaseSector(*opt.alpha * scale, *opt.beta * scale);
}

Json sector_json(const PhaseSector& s, const Options& opt) {
  return Json{{"alpha", angle_out(s.alpha(), opt)}, {"beta", angle_out(s.beta(), opt)}};
}

/// Runs `body` with timing and maps library exceptions onto report statuses.
template <class F>
RunReport guarded(std::string name, const Options& opt, F&& body) {
  RunReport r;
  r.command = std::move(name);
  r.tolerances = Json{{"tol", opt.tol}};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const ConeViolation& e) {
    r.status = Status::violation;
    r.payload["message"] = e.what();
    if (!e.clique().empty()) r.payload["violating_clique"] = one_based(e.clique());
  } catch (const std::exception& e) {
    r.status = Status::error;
    r.payload = Json{{"message", e.what()}};
  }
  r.timing_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return r;
}

/// Membership verdict plus extreme phases for a full matrix.
Json check_full(const ComplexMatrix& c, const PhaseSector& sec, const Options& opt,
                bool& member) {
  member = in_phase_cone(c, sec, opt.tol);
  Json p{{"kind", "matrix"},
         {"n", c.rows()},
         {"sector", sector_json(sec, opt)},
         {"member", member},
         {"strict_member", in_strict_phase_cone(c, sec, opt.tol)}};
  p["classification"] = std::string(to_string(classify(c, opt.tol)));
  std::optional<PhaseInterval> iv;
  if (!c.isZero(0.0)) iv = extreme_phases(c, opt.tol);
  p["extreme_phases"] = iv ? interval_json(*iv, opt) : Json(nullptr);
  return p;
}

Json check_partial(const PartialMatrix& pm, const PhaseSector& sec, const Options& opt,
                   bool& member) {
  Json cliques = Json::array();
  member = true;
  for (const Clique& k : enumerate_maximal_cliques(pm.pattern())) {
    const bool ok = in_phase_cone(pm.clique_block(k), sec, opt.tol);
    member = member && ok;
    cliques.push_back(Json{{"clique", one_based(k)}, {"member", ok}});
  }
  Json p{{"kind", "partial"},
         {"n", pm.size()},
         {"sector", sector_json(sec, opt)},
         {"member", member},
         {"cliques", cliques}};
  const bool chordal = is_chordal(pm.pattern()).chordal;
  p["chordal"] = chordal;
  p["completable"] = chordal ? Json(member) : Json(nullptr);
  try {
    const MinimalSector ms = minimal_sector(pm, opt.tol);
    if (const auto* ray = std::get_if<PhaseRay>(&ms)) {
      p["minimal_sector"] = Json{{"ray", angle_out(ray->angle, opt)}};
    } else {
      p["minimal_sector"] = sector_json(std::get<PhaseSector>(ms), opt);
    }
  } catch (const Error& e) {
    p["minimal_sector"] = nullptr;
    p["minimal_sector_note"] = e.what();
  }
  return p;
}

template <class Partial>
bool specified_kept(const Partial& pm, const ComplexMatrix& x) {
  for (int a = 0; a < pm.size(); ++a)
    for (int b = 0; b < pm.size(); ++b)
      if (pm.specified(a, b) && x(a, b) != pm.values()(a, b)) return false;
  return true;
}

ComplexMatrix load_gamma(const fs::path& file, int n) {
  ComplexMatrix g = io::matrix_from_json(io::load_json_file(file));
  if (g.rows() != n) throw InvalidArgument("gamma size does not match the partial matrix");
  return g;
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::violation: return "violation";
    case Status::error: return "error";
  }
  return "error";
}

int exit_code(Status s) {
  switch (s) {
    case Status::ok: return 0;
    case Status::violation: return 2;
    case Status::error: return 1;
  }
  return 1;
}

Json RunReport::to_json(bool with_timing) const {
  Json j{{"command", command},
         {"status", std::string(cli::to_string(status))},
         {"payload", payload},
         {"tolerances", tolerances}};
  if (with_timing) j["timing_ms"] = timing_ms;
  return j;
}

RunReport cmd_chordal(const fs::path& pattern_file, const Options& opt) {
  return guarded("chordal", opt, [&](RunReport& r) {
    const PatternGraph g = io::pattern_from_json(io::load_json_file(pattern_file));
    const ChordalityResult res = is_chordal(g);
    Json p{{"n", g.size()}, {"chordal", res.chordal}, {"banded", is_banded(g)}};
    if (res.chordal) {
      p["peo"] = one_based(res.peo->order);
      Json cl = Json::array();
      for (const Clique& k : maximal_cliques(g, *res.peo)) cl.push_back(one_based(k));
      p["maximal_cliques"] = cl;
    } else {
      p["peo"] = nullptr;
      p["maximal_cliques"] = nullptr;
    }
    r.payload = p;
  });
}

RunReport cmd_check(const fs::path& input_file, const Options& opt) {
  return guarded("check", opt, [&](RunReport& r) {
    const Json j = io::load_json_file(input_file);
    if (io::is_directed(j)) {
      throw InvalidArgument("check expects an undirected matrix or partial matrix");
    }
    const PhaseSector sec = sector_from(opt);
    bool member = false;
    const io::MatrixInput in = io::matrix_input_from_json(j);
    if (const auto* m = std::get_if<ComplexMatrix>(&in)) {
      r.payload = check_full(*m, sec, opt, member);
    } else {
      r.payload = check_partial(std::get<PartialMatrix>(in), sec, opt, member);
    }
    r.status = member ? Status::ok : Status::violation;
  });
}

RunReport cmd_complete(const CompleteArgs& args, const Options& opt) {
  return guarded("complete", opt, [&](RunReport& r) {
    const Json j = io::load_json_file(args.partial_file);
    const PhaseSector sec = sector_from(opt);
    if (args.gamma1_file.has_value() != args.gamma2_file.has_value()) {
      throw InvalidArgument("--gamma1-file and --gamma2-file must be given together");
    }
    const bool with_gammas = args.gamma1_file.has_value() || args.sample_gammas;
    if (args.gamma1_file && args.sample_gammas) {
      throw InvalidArgument("--sample-gammas cannot be combined with gamma files");
    }

    ComplexMatrix c;
    std::string method;
    bool strict = false;
    std::function<bool(const ComplexMatrix&)> keeps_pattern;
    if (io::is_directed(j)) {
      if (with_gammas) throw InvalidArgument("gammas apply to undirected banded patterns only");
      const DirectedPartialMatrix pm = io::directed_partial_from_json(j);
      c = complete_asymmetric(pm, sec, opt.tol);
      method = "asymmetric";
      strict = true;
      keeps_pattern = [pm](const ComplexMatrix& x) { return specified_kept(pm, x); };
    } else {
      const PartialMatrix pm = io::partial_from_json(j);
      if (!is_chordal(pm.pattern()).chordal) {
        throw NonChordalPattern("pattern is not chordal; complete a chordal extension instead");
      }
      const bool banded = is_banded(pm.pattern());
      if (with_gammas) {
        const PbParameterization param = build_pb_parameterization(pm, sec, opt.tol);
        ComplexMatrix g1, g2;
        if (args.sample_gammas) {
          std::mt19937_64 rng(opt.seed);
          g1 = random_gamma(pm.pattern(), rng);
          g2 = random_gamma(pm.pattern(), rng);
        } else {
          g1 = load_gamma(*args.gamma1_file, pm.size());
          g2 = load_gamma(*args.gamma2_file, pm.size());
        }
        c = apply_pb_param(param, g1, g2);
        method = "parameterized";
      } else if (banded) {
        c = central_pb_completion(pm, sec, opt.tol);
        method = "central";
      } else {
        c = complete_chordal(pm, sec, opt.tol);
        method = "chordal";
      }
      keeps_pattern = [pm](const ComplexMatrix& x) { return specified_kept(pm, x); };
    }

    // Verify what was actually written, not the in-memory copy.
    ComplexMatrix written = c;
    if (opt.out) {
      io::save_json_file(*opt.out, io::matrix_to_json(c));
      written = io::matrix_from_json(io::load_json_file(*opt.out));
    }
    bool member = false;
    Json verification = check_full(written, sec, opt, member);
    const bool pattern_ok = keeps_pattern(written);
    const bool strict_ok = !strict || verification["strict_member"].get<bool>();
    verification["pattern_kept"] = pattern_ok;

    r.payload = Json{{"method", method}, {"n", c.rows()}, {"sector", sector_json(sec, opt)}};
    if (args.sample_gammas) r.payload["seed"] = opt.seed;
    r.payload["output"] = opt.out ? Json(opt.out->string()) : Json(nullptr);
    if (!opt.out) r.payload["matrix"] = io::matrix_to_json(c);
    r.payload["verification"] = verification;
    if (!(member && pattern_ok && strict_ok)) {
      r.status = Status::error;
      r.payload["message"] = "completion failed its own membership check";
    }
  });
}

RunReport cmd_decompose(const fs::path& matrix_file, const fs::path& pattern_file,
                        bool rank_one, const Options& opt) {
  return guarded("decompose", opt, [&](RunReport& r) {
    const ComplexMatrix c = io::matrix_from_json(io::load_json_file(matrix_file));
    const PatternGraph g = io::pattern_from_json(io::load_json_file(pattern_file));
    if (g.size() != c.rows()) throw InvalidArgument("matrix and pattern sizes differ");
    const PhaseSector sec = sector_from(opt);
    const CliqueDecomposition d = pb_decompose(c, sec, g, opt.tol, rank_one);

    ComplexMatrix sum = ComplexMatrix::Zero(c.rows(), c.cols());
    for (const auto& s : d.summands) sum += s.matrix;
    const double residual = (sum - c).cwiseAbs().maxCoeff();
    const bool verified = verify_decomposition(d, c, sec, g, opt.tol);

    r.payload = Json{{"n", c.rows()},
                     {"sector", sector_json(sec, opt)},
                     {"summands", d.summands.size()},
                     {"rank_one_terms", d.rank_one ? Json(d.rank_one->size()) : Json(nullptr)},
                     {"max_residual", residual},
                     {"verified", verified}};
    if (opt.out) {
      io::save_json_file(*opt.out, io::to_json(d));
      r.payload["output"] = opt.out->string();
    } else {
      r.payload["output"] = nullptr;
      r.payload["decomposition"] = io::to_json(d);
    }
    if (!verified) {
      r.status = Status::error;
      r.payload["message"] = "decomposition failed verification";
    }
  });
}

RunReport cmd_phases(const fs::path& matrix_file, std::optional<int> boundary,
                     const Options& opt) {
  return guarded("phases", opt, [&](RunReport& r) {
    const ComplexMatrix c = io::matrix_from_json(io::load_json_file(matrix_file));
    const PhaseClass cls = classify(c, opt.tol);
    Json p{{"n", c.rows()}, {"classification", std::string(to_string(cls))}};
    if (cls == PhaseClass::zero) {
      p["extreme_phases"] = nullptr;
    } else {
      const auto iv = extreme_phases(c, opt.tol);
      p["extreme_phases"] = iv ? interval_json(*iv, opt) : Json(nullptr);
    }
    try {
      Json list = Json::array();
      for (double phi : phases(c, opt.tol).phases) list.push_back(angle_out(phi, opt));
      p["phases"] = list;
    } catch (const Unsupported& e) {
      p["phases"] = nullptr;
      p["phases_note"] = e.what();
    }
    if (boundary) {
      const auto samples = numerical_range_boundary(c, *boundary);
      Json arr = Json::array();
      for (const auto& s : samples) {
        arr.push_back(Json::array({angle_out(s.angle, opt), s.point.real(), s.point.imag()}));
      }
      p["boundary"] = arr;
      if (opt.out) {
        std::ofstream csv(*opt.out);
        if (!csv) throw InvalidArgument("cannot write " + opt.out->string());
        csv.precision(17);
        csv << "angle,re,im\n";
        for (const auto& s : samples) {
          csv << angle_out(s.angle, opt) << ',' << s.point.real() << ',' << s.point.imag()
              << '\n';
        }
        p["output"] = opt.out->string();
      }
    }
    r.payload = p;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Phase-bounded matrix cones: membership, completion and decomposition"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  bool json = false;
  std::optional<double> alpha, beta;
  std::string out_path;
  app.add_option("--tol", opt.tol, "Numerical tolerance")->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for sampled parameters")->capture_default_str();
  app.add_flag("--degrees", opt.degrees, "Read and report angles in degrees");
  app.add_option("--out", out_path, "Output file for the command's artifact");
  app.add_flag("--json", json, "Print the machine-readable report");
  app.add_option("--alpha", alpha, "Lower sector angle");
  app.add_option("--beta", beta, "Upper sector angle");

  std::string pattern_file, input_file, matrix_file, gamma1, gamma2;
  bool sample = false, rank_one = false;
  std::optional<int> boundary;

  auto* chordal = app.add_subcommand("chordal", "Chordality, PEO and maximal cliques");
  chordal->add_option("pattern", pattern_file, "Pattern JSON")->required();

  auto* check = app.add_subcommand("check", "Cone membership of a matrix or partial matrix");
  check->add_option("input", input_file, "Matrix or partial matrix JSON")->required();

  auto* complete = app.add_subcommand("complete", "Phase-bounded completion");
  complete->add_option("partial", input_file, "Partial matrix JSON")->required();
  complete->add_option("--gamma1-file", gamma1, "Contraction for the lower rotation");
  complete->add_option("--gamma2-file", gamma2, "Contraction for the upper rotation");
  complete->add_flag("--sample-gammas", sample, "Draw both contractions from --seed");

  auto* decompose = app.add_subcommand("decompose", "Clique decomposition");
  decompose->add_option("matrix", matrix_file, "Matrix JSON")->required();
  decompose->add_option("pattern", pattern_file, "Pattern JSON")->required();
  decompose->add_flag("--rank-one", rank_one, "Refine summands into rank-one terms");

  auto* ph = app.add_subcommand("phases", "Phases, classification and numerical range");
  ph->add_option("matrix", matrix_file, "Matrix JSON")->required();
  ph->add_option("--boundary", boundary, "Number of numerical range boundary samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 1;
  }

  opt.alpha = alpha;
  opt.beta = beta;
  if (!out_path.empty()) opt.out = out_path;

  RunReport rep;
  if (app.got_subcommand(chordal)) {
    rep = cmd_chordal(pattern_file, opt);
  } else if (app.got_subcommand(check)) {
    rep = cmd_check(input_file, opt);
  } else if (app.got_subcommand(complete)) {
    CompleteArgs a{input_file, std::nullopt, std::nullopt, sample};
    if (!gamma1.empty()) a.gamma1_file = gamma1;
    if (!gamma2.empty()) a.gamma2_file = gamma2;
    rep = cmd_complete(a, opt);
  } else if (app.got_subcommand(decompose)) {
    rep = cmd_decompose(matrix_file, pattern_file, rank_one, opt);
  } else {
    rep = cmd_phases(matrix_file, boundary, opt);
  }

  if (json) {
    out << rep.to_json().dump(2) << '\n';
  } else {
    out << rep.command << ": " << to_string(rep.status) << '\n';
    if (rep.payload.contains("message")) {
      out << "  " << rep.payload["message"].get<std::string>() << '\n';
    }
    for (const char* key : {"chordal", "member", "classification", "method", "summands",
                            "verified", "output"}) {
      if (rep.payload.contains(key) && !rep.payload[key].is_null()) {
        out << "  " << key << ": " << rep.payload[key].dump() << '\n';
      }
    }
  }
  return exit_code(rep.status);
}

}  // namespace phasecomp::cli

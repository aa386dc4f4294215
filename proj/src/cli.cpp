#include "sspread/cli.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sspread/digest.hpp"
#include "sspread/matrix_io.hpp"
#include "sspread/report.hpp"

namespace sspread {

int exit_code(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::mode_error:
    case ErrorCode::dimension_mismatch:
    case ErrorCode::horizon_mismatch:
      return 3;
    case ErrorCode::unknown_kind:
    case ErrorCode::unknown_example:
    case ErrorCode::unknown_inequality:
      return 4;
    default:
      return 2;
  }
}

namespace {

constexpr std::uint64_t default_seed = 1;

struct Options {
  std::string file;
  std::string id;
  std::vector<std::string> files;
  std::string mode;
  std::size_t horizon = 0;
  bool json = false;
  std::uint64_t seed = default_seed;
  std::size_t trials = 500;
  bool trials_given = false;
  std::string dims = "2..8";
  Index split = -1;
};

Json base_report(const std::string& command, std::uint64_t digest, std::optional<std::uint64_t> seed) {
  Json j;
  j["command"] = command;
  j["inputs_digest"] = hex64(digest);
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  j["versions"] = versions();
  j["checks"] = Json::array();
  return j;
}

DimRange parse_dims(const std::string& text) {
  const auto bad = [&] { return Error(ErrorCode::parse_error, "--dims expects a..b, got '" + text + "'"); };
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) throw bad();
  const auto number = [&](std::string_view s) {
    Index v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw bad();
    return v;
  };
  const std::string_view t = text;
  DimRange r{number(t.substr(0, dots)), number(t.substr(dots + 2))};
  if (r.lo < 1 || r.hi < r.lo || r.hi > 32) throw Error(ErrorCode::invalid_argument, "--dims must satisfy 1 <= a <= b <= 32");
  return r;
}

struct Loaded {
  std::string text;
  InputFile file;
};

Loaded load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  Loaded l{buf.str(), {}};
  l.file = parse_input(l.text);
  return l;
}

// The model a scale or spread is computed in: the flag, else the file
// directive, else the natural model of the file.
Model resolve_mode(const Options& o, const InputFile& f) {
  std::optional<Model> flag;
  if (!o.mode.empty()) flag = parse_mode(o.mode);
  if (flag && f.mode && *flag != *f.mode) {
    throw Error(ErrorCode::mode_error, "--mode " + o.mode + " conflicts with the file's mode " +
                                           std::string(to_string(*f.mode)));
  }
  const bool tailed = f.tail && *f.tail != Complex(0.0, 0.0);
  const Model natural = f.is_diag() || tailed ? Model::diagonal : Model::compact;
  const Model m = flag ? *flag : f.mode.value_or(natural);
  if (natural == Model::diagonal && m != Model::diagonal) {
    throw Error(ErrorCode::mode_error, "a non-compact operator has no " + std::string(to_string(m)) + " model");
  }
  if (m == Model::matrix && o.horizon != 0 && Index(o.horizon) != f.matrix().rows()) {
    throw Error(ErrorCode::mode_error, "matrix mode has the fixed horizon " + std::to_string(f.matrix().rows()));
  }
  return m;
}

TwoSidedSeq scale_of(const Options& o, const InputFile& f, Model m) {
  switch (m) {
    case Model::matrix: return matrix_scale(f.hermitian());
    case Model::compact: return compact_scale(f.hermitian(), o.horizon);
    case Model::diagonal:
      if (f.is_diag()) {
        const std::size_t k = o.horizon ? o.horizon : 2 * std::max<std::size_t>(1, f.diag().head.size());
        return diag_scale(f.diag(), k);
      }
      return tailed_scale(f.tailed(), o.horizon);
  }
  throw Error(ErrorCode::mode_error, "unknown mode");
}

int cmd_scale(const Options& o, bool spread, std::ostream& out) {
  const Loaded in = load(o.file);
  const Model m = resolve_mode(o, in.file);
  const TwoSidedSeq lam = scale_of(o, in.file, m);
  Json j = base_report(spread ? "spread" : "scale", Digest().add(std::string_view(in.text)).value(), std::nullopt);
  j["mode"] = std::string(to_string(m));
  if (spread) {
    j["spread_plus"] = to_json(spread_plus(lam));
    j["spread_full"] = to_json(spread_full(lam));
  } else {
    j["scale"] = to_json(lam);
  }
  out << (o.json ? dump(j) : render_text(j));
  return 0;
}

struct CheckInputs {
  std::vector<InputFile> files;

  bool has_tail(std::size_t i) const { return files[i].tail.has_value(); }
  bool any_tail() const {
    return std::any_of(files.begin(), files.end(), [](const InputFile& f) { return f.tail.has_value(); });
  }
  HermMatrix h(std::size_t i) const { return files[i].hermitian(); }
  const CMatrix& m(std::size_t i) const { return files[i].matrix(); }
  TailedMatrix t(std::size_t i) const { return files[i].tailed(); }
  Index split(const Options& o, std::size_t i) const { return o.split >= 0 ? o.split : m(i).rows() / 2; }
};

struct Checker {
  std::size_t min_files;
  std::size_t max_files;
  bool tailed;  // accepts "tail:" files
  std::function<Verdict(const CheckInputs&, const Options&)> run;
};

const std::map<std::string, Checker>& checkers() {
  static const std::map<std::string, Checker> table = {
      {"tao_positive", {1, 1, false, [](const CheckInputs& c, const Options& o) {
                          return check_tao_positive(c.h(0), c.split(o, 0));
                        }}},
      {"key", {1, 1, false, [](const CheckInputs& c, const Options& o) { return check_key(c.h(0), c.split(o, 0)); }}},
      {"trace_pairing", {2, 2, true, [](const CheckInputs& c, const Options&) {
                           if (c.has_tail(0)) throw Error(ErrorCode::mode_error, "only the second operand may have a tail");
                           return c.has_tail(1) ? check_trace_pairing(c.h(0), c.t(1)) : check_trace_pairing(c.h(0), c.h(1));
                         }}},
      {"commutator_scale", {2, 2, false, [](const CheckInputs& c, const Options&) {
                              return check_commutator_scale(c.h(0), c.h(1));
                            }}},
      {"commutator_sv", {2, 2, false, [](const CheckInputs& c, const Options&) {
                           return check_commutator_sv(c.h(0), c.h(1));
                         }}},
      {"mixed_commutator", {3, 3, false, [](const CheckInputs& c, const Options&) {
                              return check_mixed_commutator(c.h(0), c.h(1), c.m(2));
                            }}},
      {"general_commutator", {3, 3, false, [](const CheckInputs& c, const Options&) {
                                return check_general_commutator(c.m(0), c.m(1), c.m(2));
                              }}},
      {"unitary_conj", {2, 2, false, [](const CheckInputs& c, const Options&) {
                          return check_unitary_conj(c.h(0), c.h(1));
                        }}},
      {"agm_projection", {3, 3, true, [](const CheckInputs& c, const Options&) {
                            return c.any_tail() ? check_agm_projection(c.t(0), c.t(1), c.t(2))
                                                : check_agm_projection(c.m(0), c.m(1), c.h(2));
                          }}},
      {"agm_pair", {3, 4, false, [](const CheckInputs& c, const Options&) {
                      const HermMatrix e1 = c.h(2);
                      return check_agm_pair(c.m(0), c.m(1), e1, c.files.size() > 3 ? c.h(3) : e1);
                    }}},
      {"agm_compact", {3, 3, true, [](const CheckInputs& c, const Options&) {
                         if (c.has_tail(0) || c.has_tail(1)) throw Error(ErrorCode::mode_error, "only E may have a tail");
                         return c.has_tail(2) ? check_agm_compact(c.m(0), c.m(1), c.t(2))
                                              : check_agm_compact(c.m(0), c.m(1), c.h(2));
                       }}},
      {"agm_general", {3, 3, false, [](const CheckInputs& c, const Options&) {
                         return check_agm_general(c.m(0), c.m(1), c.h(2));
                       }}},
      {"zhan", {2, 2, true, [](const CheckInputs& c, const Options&) {
                  return c.any_tail() ? check_zhan(c.t(0), c.t(1)) : check_zhan(c.h(0), c.h(1));
                }}},
      {"projection_split", {2, 2, true, [](const CheckInputs& c, const Options&) {
                              return c.any_tail() ? check_projection_split(c.t(0), c.t(1))
                                                  : check_projection_split(c.h(0), c.h(1));
                            }}},
      {"control_kittaneh", {3, 3, false, [](const CheckInputs& c, const Options&) {
                              return check_kittaneh_positive(c.h(0), c.h(1), c.m(2));
                            }}},
      {"control_bhatia_kittaneh", {2, 2, false, [](const CheckInputs& c, const Options&) {
                                     return check_bhatia_kittaneh(c.m(0), c.m(1));
                                   }}},
      {"strict_gap", {1, 1, false, [](const CheckInputs& c, const Options&) { return check_strict_gap(c.h(0)); }}},
  };
  return table;
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto it = checkers().find(o.id);
  if (it == checkers().end()) throw Error(ErrorCode::unknown_inequality, "unknown inequality '" + o.id + "'");
  const Checker& checker = it->second;
  if (o.files.size() < checker.min_files || o.files.size() > checker.max_files) {
    throw Error(ErrorCode::invalid_argument, o.id + " takes " + std::to_string(checker.min_files) +
                                                 (checker.max_files > checker.min_files ? " or more" : "") +
                                                 " input files, got " + std::to_string(o.files.size()));
  }
  if (o.mode == "matrix") throw Error(ErrorCode::mode_error, "the verifiers work in the compact or diagonal model");
  Digest digest;
  digest.add(std::string_view(o.id));
  CheckInputs inputs;
  for (const auto& path : o.files) {
    Loaded l = load(path);
    digest.add(std::string_view(l.text));
    if (l.file.is_diag()) throw Error(ErrorCode::mode_error, "'" + path + "' is a diagonal specification; check takes matrix files");
    if (l.file.mode == Model::matrix) throw Error(ErrorCode::mode_error, "'" + path + "' declares matrix mode");
    if (l.file.tail && !checker.tailed) throw Error(ErrorCode::mode_error, o.id + " has no tailed form");
    if (l.file.tail && o.mode == "compact") throw Error(ErrorCode::mode_error, "'" + path + "' is not compact");
    inputs.files.push_back(std::move(l.file));
  }
  const Verdict v = checker.run(inputs, o);
  Json j = base_report("check", digest.value(), std::nullopt);
  j["checks"].push_back(to_json(v));
  out << (o.json ? dump(j) : render_text(j));
  return v.holds ? 0 : 1;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
  if (!is_fuzz_id(o.id)) throw Error(ErrorCode::unknown_inequality, "unknown inequality '" + o.id + "'");
  const DimRange dims = parse_dims(o.dims);
  const FuzzSummary s = fuzz(o.id, o.trials, dims, o.seed);
  const auto digest = Digest()
                          .add(std::string_view(o.id))
                          .add(std::uint64_t(o.trials))
                          .add(std::uint64_t(dims.lo))
                          .add(std::uint64_t(dims.hi))
                          .add(o.seed)
                          .value();
  Json j = base_report("fuzz", digest, o.seed);
  // The worst trial, replayed for its full record.
  if (s.trials > 0) j["checks"].push_back(to_json(fuzz_trial(o.id, s.worst_seed, trial_dim(s.worst_seed, dims))));
  j["campaign"] = to_json(s);
  out << (o.json ? dump(j) : render_text(j));
  return s.failures == 0 ? 0 : 1;
}

int cmd_repro(const Options& o, std::ostream& out) {
  const ReproReport r = repro(o.id);
  Json j = base_report("repro", Digest().add(std::string_view(o.id)).value(), std::nullopt);
  for (const auto& v : r.verdicts) j["checks"].push_back(to_json(v));
  j["repro"] = to_json(r);
  out << (o.json ? dump(j) : render_text(j));
  return r.pass ? 0 : 1;
}

int cmd_suite(const Options& o, std::ostream& out) {
  const DimRange dims = parse_dims(o.dims);
  const std::size_t trials = o.trials;
  const auto digest = Digest()
                          .add(std::string_view("suite"))
                          .add(std::uint64_t(trials))
                          .add(std::uint64_t(dims.lo))
                          .add(std::uint64_t(dims.hi))
                          .add(o.seed)
                          .value();
  Json j = base_report("suite", digest, o.seed);
  bool pass = true;
  Json campaigns = Json::array();
  for (const auto& id : fuzz_ids()) {
    const FuzzSummary s = fuzz(id, trials, dims, o.seed);
    pass = pass && s.failures == 0;
    campaigns.push_back(to_json(s));
  }
  const PropertyReport props = property_suite(o.seed, o.trials_given ? trials : 0);
  pass = pass && props.pass;
  Json repros = Json::array();
  for (const auto& id : example_ids()) {
    const ReproReport r = repro(id);
    pass = pass && r.pass;
    for (const auto& v : r.verdicts) j["checks"].push_back(to_json(v));
    repros.push_back(to_json(r));
  }
  j["pass"] = pass;
  j["campaigns"] = campaigns;
  j["properties"] = to_json(props);
  j["repro"] = repros;
  out << (o.json ? dump(j) : render_text(j));
  return pass ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral spread of Hermitian operators and the inequalities built on it", "sspread"};
  app.require_subcommand(1, 1);
  Options o;

  const auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit the JSON report"); };
  const auto model_flags = [&](CLI::App* sub) {
    sub->add_option("--mode", o.mode, "Operator model")->check(CLI::IsMember({"matrix", "compact", "diagonal"}));
  };
  const auto seed_flag = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Base seed")->envname("SSPREAD_SEED");
  };
  const auto trials_flag = [&](CLI::App* sub) {
    sub->add_option("--trials", o.trials, "Trials per campaign");
  };
  const auto dims_flag = [&](CLI::App* sub) {
    sub->add_option("--dims", o.dims, "Dimension range a..b");
  };

  auto* scale = app.add_subcommand("scale", "Spectral scale of an operator file");
  auto* spread = app.add_subcommand("spread", "Spectral spread of an operator file");
  for (auto* sub : {scale, spread}) {
    sub->add_option("file", o.file, "Matrix or diag file")->required();
    model_flags(sub);
    sub->add_option("--horizon", o.horizon, "Number of scale entries per side")->check(CLI::PositiveNumber);
    json_flag(sub);
  }

  auto* check = app.add_subcommand("check", "Verify one inequality on input files");
  check->add_option("id", o.id, "Inequality id")->required();
  check->add_option("files", o.files, "Operand files");
  model_flags(check);
  check->add_option("--split", o.split, "Block split for tao_positive and key")->check(CLI::NonNegativeNumber);
  json_flag(check);

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Seeded random campaign for one inequality");
  fuzz_cmd->add_option("id", o.id, "Campaign id")->required();
  trials_flag(fuzz_cmd);
  dims_flag(fuzz_cmd);
  seed_flag(fuzz_cmd);
  json_flag(fuzz_cmd);

  auto* repro_cmd = app.add_subcommand("repro", "Recompute a worked example");
  repro_cmd->add_option("id", o.id, "Example id")->required();
  json_flag(repro_cmd);

  auto* suite = app.add_subcommand("suite", "All campaigns, properties and examples");
  trials_flag(suite);
  dims_flag(suite);
  seed_flag(suite);
  json_flag(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  o.trials_given = suite->count("--trials") > 0;

  try {
    if (*scale) return cmd_scale(o, false, out);
    if (*spread) return cmd_scale(o, true, out);
    if (*check) return cmd_check(o, out);
    if (*fuzz_cmd) return cmd_fuzz(o, out);
    if (*repro_cmd) return cmd_repro(o, out);
    return cmd_suite(o, out);
  } catch (const Error& e) {
    err << "sspread: " << e.what() << '\n';
    if (o.json) {
      Json j;
      j["command"] = app.get_subcommands().front()->get_name();
      j["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
      j["versions"] = versions();
      out << dump(j);
    }
    return exit_code(e.code());
  }
}

}  // namespace sspread

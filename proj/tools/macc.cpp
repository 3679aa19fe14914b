// Command-line front end: rate-memory tables, scheme simulation dumps,
// ground-truth verification, cut-set bounds, and setup comparisons. Every
// run is a pure function of its flags (plus an optional JSON config), so
// identical invocations produce byte-identical output.

#include "macc/analysis.hpp"
#include "macc/gf.hpp"
#include "macc/scheme.hpp"
#include "macc/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using macc::Rat;
using nlohmann::json;

std::string dec(const Rat& v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v.to_double());
  return buf;
}

Rat parse_rat(const std::string& text) {
  const std::string err = "not a rational number: " + text;
  auto to_ll = [&](const std::string& part) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &pos);
    } catch (...) {
      throw std::invalid_argument(err);
    }
    if (pos != part.size() || part.empty()) throw std::invalid_argument(err);
    return v;
  };
  if (const auto slash = text.find('/'); slash != std::string::npos)
    return Rat(to_ll(text.substr(0, slash)), to_ll(text.substr(slash + 1)));
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string ip = text.substr(0, dot);
    const std::string fp = text.substr(dot + 1);
    if (fp.empty() || fp.size() > 12 ||
        fp.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument(err);
    long long den = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
    const bool neg = !ip.empty() && ip[0] == '-';
    const long long whole = (ip.empty() || ip == "-") ? 0 : to_ll(ip);
    const Rat mag = Rat(whole < 0 ? -whole : whole) + Rat(to_ll(fp), den);
    return neg ? Rat(0) - mag : mag;
  }
  return Rat(to_ll(text));
}

std::string subset_str(const macc::Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string hex_syms(const macc::FieldSpec& f, const macc::SymbolVec& v) {
  const int width = (f.l + 3) / 4;
  std::string out;
  char buf[16];
  for (macc::Symbol x : v) {
    std::snprintf(buf, sizeof buf, "%0*x", width, x);
    out += buf;
  }
  return out;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string render_csv(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << csv_cell(cells[i]);
    }
    os << '\n';
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
  return os.str();
}

std::string render_json_table(const Table& t) {
  json arr = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < t.header.size(); ++i) obj[t.header[i]] = row[i];
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::string render_table(const Table& t, const std::string& format) {
  if (format == "csv") return render_csv(t);
  if (format == "json") return render_json_table(t);
  throw std::invalid_argument("unknown format: " + format);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

macc::Variant variant_from(const std::string& name) {
  if (name == "secrecy_privacy") return macc::Variant::SecrecyPrivacy;
  if (name == "secrecy_only") return macc::Variant::SecrecyOnly;
  if (name == "dedicated_rpkp") return macc::Variant::DedicatedRPKP;
  throw std::invalid_argument("unknown variant: " + name);
}

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file: " + path);
  json cfg = json::parse(in);
  if (!cfg.is_object()) throw std::runtime_error("config must be a JSON object");
  static const std::set<std::string> known = {
      "command", "C",   "r",      "N",   "t",       "variant", "s",       "seed",
      "trials",  "demands", "mode", "M", "format", "out",     "out_dir", "envelope",
      "fault"};
  for (const auto& item : cfg.items())
    if (!known.count(item.key())) throw std::runtime_error("unknown config key: " + item.key());
  return cfg;
}

// config fills in whatever the command line left untouched
template <class T>
void merge(const json& cfg, const char* key, const CLI::Option* opt, T& value) {
  if (opt->count() > 0 || !cfg.contains(key)) return;
  value = cfg.at(key).get<T>();
}

void merge_r_list(const json& cfg, const CLI::Option* opt, std::vector<int>& value) {
  if (opt->count() > 0 || !cfg.contains("r")) return;
  const json& v = cfg.at("r");
  value = v.is_array() ? v.get<std::vector<int>>() : std::vector<int>{v.get<int>()};
}

void merge_m_list(const json& cfg, const CLI::Option* opt, std::vector<std::string>& value) {
  if (opt->count() > 0 || !cfg.contains("M")) return;
  value.clear();
  for (const json& v : cfg.at("M")) {
    if (v.is_string())
      value.push_back(v.get<std::string>());
    else if (v.is_number_integer())
      value.push_back(std::to_string(v.get<long long>()));
    else
      throw std::runtime_error("config M entries must be integers or strings like \"63/2\"");
  }
}

void require_set(int value, const char* flag) {
  if (value < 0) throw std::invalid_argument(std::string(flag) + " is required");
}

// ---- tradeoff ----

struct TradeoffArgs {
  int C = -1, r = -1, N = -1;
  std::string variant = "both";
  bool envelope = false;
  std::string format = "csv";
  std::string out;
  CLI::Option *oC = nullptr, *oR = nullptr, *oN = nullptr, *oVariant = nullptr,
              *oEnvelope = nullptr, *oFormat = nullptr, *oOut = nullptr;
};

int run_tradeoff(TradeoffArgs& a, const json& cfg) {
  merge(cfg, "C", a.oC, a.C);
  merge(cfg, "r", a.oR, a.r);
  merge(cfg, "N", a.oN, a.N);
  merge(cfg, "variant", a.oVariant, a.variant);
  merge(cfg, "envelope", a.oEnvelope, a.envelope);
  merge(cfg, "format", a.oFormat, a.format);
  merge(cfg, "out", a.oOut, a.out);
  require_set(a.C, "--C");
  require_set(a.r, "--r");
  require_set(a.N, "--N");

  Table table;
  table.header = {"variant", "C", "r", "N", "t", "M", "R"};
  auto add_curve = [&](const macc::TradeoffCurve& curve, const char* label) {
    for (const auto& p : curve.points)
      table.rows.push_back({label, std::to_string(a.C), std::to_string(a.r),
                            std::to_string(a.N), std::to_string(p.t), dec(p.M), dec(p.R)});
    if (a.envelope)
      for (const auto& p : curve.envelope())
        table.rows.push_back({label, std::to_string(a.C), std::to_string(a.r),
                              std::to_string(a.N), "interpolated", dec(p.M), dec(p.R)});
  };
  if (a.variant == "both" || a.variant == "secrecy_privacy")
    add_curve(macc::curve_secrecy_privacy(a.C, a.r, a.N), "secrecy_privacy");
  if (a.variant == "both" || a.variant == "secrecy_only")
    add_curve(macc::curve_secrecy_only(a.C, a.r, a.N), "secrecy_only");
  if (a.variant == "dedicated_rpkp") {
    if (a.r != 1) throw std::invalid_argument("the dedicated baseline has r = 1");
    add_curve(macc::curve_secrecy_only(a.C, 1, a.N), "dedicated_rpkp");
  }
  write_output(render_table(table, a.format), a.out);
  return 0;
}

// ---- simulate ----

struct SimulateArgs {
  int C = -1, r = -1, N = -1, t = -1, s = 1;
  std::string variant = "secrecy_privacy";
  std::uint64_t seed = 0;
  std::vector<int> demands;
  std::string format = "csv";
  std::string out;
  CLI::Option *oC = nullptr, *oR = nullptr, *oN = nullptr, *oT = nullptr, *oS = nullptr,
              *oVariant = nullptr, *oSeed = nullptr, *oDemands = nullptr, *oFormat = nullptr,
              *oOut = nullptr;
};

int run_simulate(SimulateArgs& a, const json& cfg) {
  merge(cfg, "C", a.oC, a.C);
  merge(cfg, "r", a.oR, a.r);
  merge(cfg, "N", a.oN, a.N);
  merge(cfg, "t", a.oT, a.t);
  merge(cfg, "s", a.oS, a.s);
  merge(cfg, "variant", a.oVariant, a.variant);
  merge(cfg, "seed", a.oSeed, a.seed);
  merge(cfg, "demands", a.oDemands, a.demands);
  merge(cfg, "format", a.oFormat, a.format);
  merge(cfg, "out", a.oOut, a.out);
  require_set(a.C, "--C");
  require_set(a.r, "--r");
  require_set(a.N, "--N");
  require_set(a.t, "--t");

  const macc::SchemeParams par =
      macc::make_scheme({a.C, a.r, a.N}, a.t, variant_from(a.variant), a.s);
  const std::uint64_t K = par.user_count();

  std::mt19937_64 rng(a.seed);
  std::vector<macc::SymbolVec> library(a.N, macc::SymbolVec(par.sharing.file_symbols()));
  for (auto& f : library)
    for (auto& x : f) x = static_cast<macc::Symbol>(rng() & par.sharing.field.mask());

  macc::DemandVector dv;
  if (a.demands.empty()) {
    dv.d.resize(K);
    for (auto& d : dv.d) d = static_cast<int>(rng() % a.N) + 1;
  } else {
    if (a.demands.size() != K)
      throw std::invalid_argument("--demands needs one entry per user (K = " +
                                  std::to_string(K) + ")");
    dv.d = a.demands;
  }

  const macc::Randomness rnd = macc::draw_randomness(par, a.seed);
  const macc::Placement pl = macc::place(par, library, rnd);
  const macc::Broadcast bc = macc::deliver(par, rnd, pl.shares, dv);

  const auto users = macc::enumerate_subsets(a.C, a.r);
  const auto tsets = macc::enumerate_subsets(a.C, a.t);
  const std::string fsyms = std::to_string(par.sharing.file_symbols());
  const std::string ssyms = std::to_string(par.sharing.s);

  Table table;
  table.header = {"entity", "index_set", "length", "data"};
  for (int i = 1; i <= a.N; ++i)
    table.rows.push_back(
        {"file", "i=" + std::to_string(i), fsyms, hex_syms(par.sharing.field, library[i - 1])});
  if (par.corner) {
    table.rows.push_back({"payload", "corner", ssyms, hex_syms(par.sharing.field, bc.payloads[0])});
  } else {
    const auto ssets = macc::enumerate_subsets(a.C, a.t + a.r);
    for (std::size_t si = 0; si < ssets.size(); ++si)
      table.rows.push_back({"payload", "S=" + subset_str(ssets[si]), ssyms,
                            hex_syms(par.sharing.field, bc.payloads[si])});
  }
  for (std::size_t gi = 0; gi < bc.demand_masks.size(); ++gi) {
    std::string bits;
    for (auto b : bc.demand_masks[gi]) bits += b ? '1' : '0';
    table.rows.push_back({"q_vector", "G=" + subset_str(users[gi]), std::to_string(a.N), bits});
  }
  for (const auto& cc : pl.caches) {
    const std::string c = "c=" + std::to_string(cc.cache_id);
    for (const auto& [key, v] : cc.file_shares)
      table.rows.push_back({"cache_file_share",
                            c + ";i=" + std::to_string(key.first) + ";T=" + subset_str(tsets[key.second]),
                            ssyms, hex_syms(par.sharing.field, v)});
    for (const auto& [key, v] : cc.key_shares)
      table.rows.push_back({"cache_key_share",
                            c + ";G=" + subset_str(users[key.first]) + ";T=" + subset_str(tsets[key.second]),
                            ssyms, hex_syms(par.sharing.field, v)});
  }
  const bool oob = par.variant != macc::Variant::SecrecyPrivacy;
  for (std::uint64_t gi = 0; gi < K; ++gi) {
    std::vector<macc::CacheContents> acc;
    for (int c : users[gi]) acc.push_back(pl.caches[c - 1]);
    const macc::SymbolVec got =
        macc::decode(par, users[gi], bc, acc, dv.d[gi],
                     oob ? std::optional<macc::DemandVector>(dv) : std::nullopt);
    const bool ok = got == library[dv.d[gi] - 1];
    table.rows.push_back({ok ? "decode_ok" : "decode_fail",
                          "G=" + subset_str(users[gi]) + ";d=" + std::to_string(dv.d[gi]), fsyms,
                          hex_syms(par.sharing.field, got)});
  }
  write_output(render_table(table, a.format), a.out);
  return 0;
}

// ---- verify ----

struct VerifyArgs {
  int C = 2, r = 1, N = 2, t = 0, s = 1, trials = 20;
  std::string variant = "secrecy_privacy";
  std::uint64_t seed = 0;
  std::string fault;
  std::string format = "json";
  std::string out;
  CLI::Option *oC = nullptr, *oR = nullptr, *oN = nullptr, *oT = nullptr, *oS = nullptr,
              *oTrials = nullptr, *oVariant = nullptr, *oSeed = nullptr, *oFault = nullptr,
              *oFormat = nullptr, *oOut = nullptr;
};

int run_verify(VerifyArgs& a, const json& cfg) {
  merge(cfg, "C", a.oC, a.C);
  merge(cfg, "r", a.oR, a.r);
  merge(cfg, "N", a.oN, a.N);
  merge(cfg, "t", a.oT, a.t);
  merge(cfg, "s", a.oS, a.s);
  merge(cfg, "trials", a.oTrials, a.trials);
  merge(cfg, "variant", a.oVariant, a.variant);
  merge(cfg, "seed", a.oSeed, a.seed);
  merge(cfg, "fault", a.oFault, a.fault);
  merge(cfg, "format", a.oFormat, a.format);
  merge(cfg, "out", a.oOut, a.out);
  if (a.format != "json") throw std::invalid_argument("verify reports are JSON only");

  std::vector<macc::VerificationReport> reports;
  bool failed = false;
  if (a.fault.empty()) {
    const macc::SchemeParams par =
        macc::make_scheme({a.C, a.r, a.N}, a.t, variant_from(a.variant), a.s);
    reports = macc::verify_suite(par, a.seed, a.trials);
    for (const auto& rep : reports) failed = failed || !rep.acceptable();
  } else {
    std::vector<macc::Fault> faults;
    if (a.fault == "all")
      faults = {macc::Fault::ZeroTransmissionKeys, macc::Fault::ReuseKeySplit,
                macc::Fault::RankDeficientGenerator};
    else if (a.fault == "zero_transmission_keys")
      faults = {macc::Fault::ZeroTransmissionKeys};
    else if (a.fault == "reuse_key_split")
      faults = {macc::Fault::ReuseKeySplit};
    else if (a.fault == "rank_deficient_generator")
      faults = {macc::Fault::RankDeficientGenerator};
    else
      throw std::invalid_argument("unknown fault: " + a.fault);
    for (macc::Fault f : faults) {
      reports.push_back(macc::run_fault_check(f));
      // a detected fault is a failed verification of the doctored scheme
      failed = failed || reports.back().outcome == macc::Outcome::Pass;
    }
  }
  json arr = json::array();
  for (const auto& rep : reports) arr.push_back(json::parse(rep.to_json()));
  write_output(arr.dump(2) + "\n", a.out);
  return failed ? 1 : 0;
}

// ---- bounds ----

struct BoundsArgs {
  int C = -1, r = -1, N = -1;
  std::vector<std::string> m_grid;
  std::string format = "csv";
  std::string out;
  CLI::Option *oC = nullptr, *oR = nullptr, *oN = nullptr, *oM = nullptr, *oFormat = nullptr,
              *oOut = nullptr;
};

int run_bounds(BoundsArgs& a, const json& cfg) {
  merge(cfg, "C", a.oC, a.C);
  merge(cfg, "r", a.oR, a.r);
  merge(cfg, "N", a.oN, a.N);
  merge_m_list(cfg, a.oM, a.m_grid);
  merge(cfg, "format", a.oFormat, a.format);
  merge(cfg, "out", a.oOut, a.out);
  require_set(a.C, "--C");
  require_set(a.r, "--r");
  require_set(a.N, "--N");

  const auto env = macc::curve_secrecy_privacy(a.C, a.r, a.N).envelope();
  std::set<Rat> grid;
  for (const auto& p : env) grid.insert(p.M);
  for (const auto& text : a.m_grid) grid.insert(parse_rat(text));

  const bool has_floor = a.r < a.C;
  const Rat floor = has_floor ? macc::min_feasible_memory(a.C, a.r) : Rat(0);

  Table table;
  table.header = {"C", "r", "N", "M", "lower_bound", "achievable", "ratio", "regime"};
  for (const Rat& M : grid) {
    const Rat lb = macc::lower_bound(a.C, a.r, a.N, M);
    std::string achievable, ratio, regime;
    if (M < env.front().M) {
      regime = (has_floor && M < floor) ? "infeasible" : "uncertified";
    } else {
      const macc::GapCertificate cert = macc::gap_certificate(a.C, a.r, a.N, M);
      achievable = dec(cert.achievable);
      ratio = dec(cert.ratio);
      regime = macc::regime_name(cert.regime);
    }
    table.rows.push_back({std::to_string(a.C), std::to_string(a.r), std::to_string(a.N), dec(M),
                          dec(lb), achievable, ratio, regime});
  }
  write_output(render_table(table, a.format), a.out);
  return 0;
}

// ---- compare ----

struct CompareArgs {
  int C = -1, N = -1;
  std::vector<int> r_list = {1, 2, 3};
  std::string mode;
  std::string format = "csv";
  std::string out;
  CLI::Option *oC = nullptr, *oN = nullptr, *oR = nullptr, *oMode = nullptr, *oFormat = nullptr,
              *oOut = nullptr;
};

int run_compare(CompareArgs& a, const json& cfg) {
  merge(cfg, "C", a.oC, a.C);
  merge(cfg, "N", a.oN, a.N);
  merge_r_list(cfg, a.oR, a.r_list);
  merge(cfg, "mode", a.oMode, a.mode);
  merge(cfg, "format", a.oFormat, a.format);
  merge(cfg, "out", a.oOut, a.out);
  require_set(a.C, "--C");
  require_set(a.N, "--N");
  if (a.mode != "same-cache" && a.mode != "same-access")
    throw std::invalid_argument("--mode must be same-cache or same-access");

  const auto rows = a.mode == "same-cache" ? macc::compare_same_cache(a.C, a.N, a.r_list)
                                           : macc::compare_same_access(a.C, a.N, a.r_list);
  Table table;
  table.header = {"mode", "C", "N", "r", "M_axis", "RPU"};
  for (const auto& row : rows)
    table.rows.push_back({a.mode, std::to_string(a.C), std::to_string(a.N),
                          std::to_string(row.r), dec(row.axis), dec(row.rpu)});
  write_output(render_table(table, a.format), a.out);
  return 0;
}

// ---- field-table ----

struct FieldTableArgs {
  std::string format = "csv";
  std::string out;
  CLI::Option *oFormat = nullptr, *oOut = nullptr;
};

int run_field_table(FieldTableArgs& a, const json& cfg) {
  merge(cfg, "format", a.oFormat, a.format);
  merge(cfg, "out", a.oOut, a.out);
  Table table;
  table.header = {"l", "modulus_hex"};
  for (const macc::FieldSpec& f : macc::modulus_table()) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%x", f.modulus);
    table.rows.push_back({std::to_string(f.l), buf});
  }
  write_output(render_table(table, a.format), a.out);
  return 0;
}

// ---- figures ----

struct FiguresArgs {
  std::string out_dir = ".";
  CLI::Option* oOutDir = nullptr;
};

int run_figures(FiguresArgs& a, const json& cfg) {
  merge(cfg, "out_dir", a.oOutDir, a.out_dir);
  namespace fs = std::filesystem;
  fs::create_directories(a.out_dir);
  const json none = json::object();

  auto tradeoff_at = [&](int C, int r, int N, const std::string& file) {
    TradeoffArgs t;
    CLI::App scratch;
    t.oC = scratch.add_option("--C", t.C);
    t.oR = scratch.add_option("--r", t.r);
    t.oN = scratch.add_option("--N", t.N);
    t.oVariant = scratch.add_option("--variant", t.variant);
    t.oEnvelope = scratch.add_flag("--envelope", t.envelope);
    t.oFormat = scratch.add_option("--format", t.format);
    t.oOut = scratch.add_option("--out", t.out);
    t.C = C;
    t.r = r;
    t.N = N;
    t.out = (fs::path(a.out_dir) / file).string();
    run_tradeoff(t, none);
    std::cout << t.out << "\n";
  };
  auto compare_at = [&](const std::string& mode, int C, int N, const std::string& file) {
    CompareArgs c;
    CLI::App scratch;
    c.oC = scratch.add_option("--C", c.C);
    c.oN = scratch.add_option("--N", c.N);
    c.oR = scratch.add_option("--r", c.r_list);
    c.oMode = scratch.add_option("--mode", c.mode);
    c.oFormat = scratch.add_option("--format", c.format);
    c.oOut = scratch.add_option("--out", c.out);
    c.C = C;
    c.N = N;
    c.mode = mode;
    c.out = (fs::path(a.out_dir) / file).string();
    run_compare(c, none);
    std::cout << c.out << "\n";
  };

  tradeoff_at(5, 1, 7, "fig2.csv");
  tradeoff_at(5, 2, 15, "fig3.csv");
  compare_at("same-cache", 5, 10, "fig4.csv");
  compare_at("same-cache", 5, 50, "fig5.csv");
  compare_at("same-access", 5, 50, "fig7.csv");
  compare_at("same-access", 5, 10, "fig8.csv");
  return 0;
}

int run(std::vector<std::string> args) {
  // the config tokens are consumed here, before CLI11 sees the arguments, so
  // that an injected command token can precede every remaining flag
  std::string config_path;
  for (std::size_t i = 0; i < args.size();) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
      args.erase(args.begin() + i);
    } else {
      ++i;
    }
  }
  const json cfg = config_path.empty() ? json::object() : load_config(config_path);

  static const std::vector<std::string> commands = {"tradeoff", "simulate",    "verify", "bounds",
                                                    "compare",  "field-table", "figures"};
  const bool has_command = std::any_of(args.begin(), args.end(), [&](const std::string& tok) {
    return std::find(commands.begin(), commands.end(), tok) != commands.end();
  });
  if (!has_command && cfg.contains("command"))
    args.insert(args.begin(), cfg.at("command").get<std::string>());

  CLI::App app{"secretive coded caching over multi-access combinatorial topologies"};
  app.require_subcommand(1);
  std::string config_opt;
  app.add_option("--config", config_opt, "JSON run configuration; explicit flags win");

  const auto variants = CLI::IsMember({"secrecy_privacy", "secrecy_only", "dedicated_rpkp"});
  const auto formats = CLI::IsMember({"csv", "json"});

  TradeoffArgs t;
  CLI::App* tradeoff = app.add_subcommand("tradeoff", "rate-memory points of the tradeoff curves");
  t.oC = tradeoff->add_option("--C", t.C, "number of caches");
  t.oR = tradeoff->add_option("--r", t.r, "caches per user");
  t.oN = tradeoff->add_option("--N", t.N, "number of files");
  t.oVariant = tradeoff->add_option("--variant", t.variant, "curve set")
                   ->check(CLI::IsMember({"both", "secrecy_privacy", "secrecy_only", "dedicated_rpkp"}));
  t.oEnvelope = tradeoff->add_flag("--envelope", t.envelope, "append envelope vertices as t=interpolated rows");
  t.oFormat = tradeoff->add_option("--format", t.format)->check(formats);
  t.oOut = tradeoff->add_option("--out", t.out, "output file (default stdout)");

  SimulateArgs sim;
  CLI::App* simulate = app.add_subcommand("simulate", "one full placement/delivery/decode round");
  sim.oC = simulate->add_option("--C", sim.C, "number of caches");
  sim.oR = simulate->add_option("--r", sim.r, "caches per user");
  sim.oN = simulate->add_option("--N", sim.N, "number of files");
  sim.oT = simulate->add_option("--t", sim.t, "placement parameter");
  sim.oS = simulate->add_option("--s", sim.s, "symbols per share");
  sim.oVariant = simulate->add_option("--variant", sim.variant)->check(variants);
  sim.oSeed = simulate->add_option("--seed", sim.seed, "seed for library, demands and keys");
  sim.oDemands = simulate->add_option("--demands", sim.demands, "demanded file per user, 1-based")
                     ->delimiter(',');
  sim.oFormat = simulate->add_option("--format", sim.format)->check(formats);
  sim.oOut = simulate->add_option("--out", sim.out, "output file (default stdout)");

  VerifyArgs ver;
  CLI::App* verify = app.add_subcommand("verify", "ground-truth checks, JSON reports");
  ver.oC = verify->add_option("--C", ver.C, "number of caches");
  ver.oR = verify->add_option("--r", ver.r, "caches per user");
  ver.oN = verify->add_option("--N", ver.N, "number of files");
  ver.oT = verify->add_option("--t", ver.t, "placement parameter");
  ver.oS = verify->add_option("--s", ver.s, "symbols per share");
  ver.oTrials = verify->add_option("--trials", ver.trials, "random correctness trials");
  ver.oVariant = verify->add_option("--variant", ver.variant)->check(variants);
  ver.oSeed = verify->add_option("--seed", ver.seed);
  ver.oFault = verify->add_option("--fault", ver.fault,
                                  "inject a fault into a built-in micro instance instead")
                   ->check(CLI::IsMember({"all", "zero_transmission_keys", "reuse_key_split",
                                          "rank_deficient_generator"}));
  ver.oFormat = verify->add_option("--format", ver.format)->check(formats);
  ver.oOut = verify->add_option("--out", ver.out, "output file (default stdout)");

  BoundsArgs b;
  CLI::App* bounds = app.add_subcommand("bounds", "cut-set lower bounds against the envelope");
  b.oC = bounds->add_option("--C", b.C, "number of caches");
  b.oR = bounds->add_option("--r", b.r, "caches per user");
  b.oN = bounds->add_option("--N", b.N, "number of files");
  b.oM = bounds->add_option("--M", b.m_grid, "extra memory grid points, e.g. 13,63/2,40")
             ->delimiter(',');
  b.oFormat = bounds->add_option("--format", b.format)->check(formats);
  b.oOut = bounds->add_option("--out", b.out, "output file (default stdout)");

  CompareArgs cmp;
  CLI::App* compare = app.add_subcommand("compare", "multi-access setups against the dedicated baseline");
  cmp.oMode = compare->add_option("--mode", cmp.mode, "alignment axis")
                  ->check(CLI::IsMember({"same-cache", "same-access"}));
  cmp.oC = compare->add_option("--C", cmp.C, "number of caches");
  cmp.oN = compare->add_option("--N", cmp.N, "number of files");
  cmp.oR = compare->add_option("--r", cmp.r_list, "setups to compare")->delimiter(',');
  cmp.oFormat = compare->add_option("--format", cmp.format)->check(formats);
  cmp.oOut = compare->add_option("--out", cmp.out, "output file (default stdout)");

  FieldTableArgs ft;
  CLI::App* field_table = app.add_subcommand("field-table", "the fixed modulus per field degree");
  ft.oFormat = field_table->add_option("--format", ft.format)->check(formats);
  ft.oOut = field_table->add_option("--out", ft.out, "output file (default stdout)");

  FiguresArgs figs;
  CLI::App* figures = app.add_subcommand("figures", "write the six study CSV files");
  figs.oOutDir = figures->add_option("--out-dir", figs.out_dir, "target directory");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (tradeoff->parsed()) return run_tradeoff(t, cfg);
  if (simulate->parsed()) return run_simulate(sim, cfg);
  if (verify->parsed()) return run_verify(ver, cfg);
  if (bounds->parsed()) return run_bounds(b, cfg);
  if (compare->parsed()) return run_compare(cmp, cfg);
  if (field_table->parsed()) return run_field_table(ft, cfg);
  if (figures->parsed()) return run_figures(figs, cfg);
  return 2;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(std::vector<std::string>(argv + 1, argv + argc));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

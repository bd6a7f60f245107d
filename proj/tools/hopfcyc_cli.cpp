// hopfcyc: command-line front end for the verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include "hopfcyc/cohomology.hpp"
#include "hopfcyc/family.hpp"
#include "hopfcyc/parser.hpp"
#include "hopfcyc/trees.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace hc;
using json = nlohmann::ordered_json;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- configuration ------------------------------------------------------------------

const std::vector<std::string> kKeys = {"algebra", "k",   "N",       "weight", "pbw-cap", "tree-cap", "n",
                                        "samples", "seed", "format", "name",   "max",     "timing"};

// Flat "key = value" lines, optionally grouped under [section] headers.  Keys
// before any header or under [defaults] apply to every command; a section named
// after the command ("pages", "verify cocycle", ...) overrides them.
using ConfigFile = std::map<std::string, std::map<std::string, std::string>>;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

ConfigFile read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  ConfigFile out;
  std::string section = "defaults", line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(path + ":" + std::to_string(lineno) + ": unterminated section");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end())
      throw ConfigError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    out[section][key] = trim(line.substr(eq + 1));
  }
  return out;
}

struct Settings {
  std::string algebra;
  int k = 0;
  int N = 0;
  int weight = 1;
  int pbw_cap = 4;
  int tree_cap = 4;
  int n = 2;
  int samples = 30;
  unsigned seed = 0;
  std::string format = "text";
  std::string name;
  int max = 6;
  bool timing = false;
  std::set<std::string> given;  // keys set by a flag or the config file

  bool has(const std::string& key) const { return given.count(key) > 0; }

  Truncation truncation() const {
    Truncation t;
    t.pbw_cap = pbw_cap;
    t.letter_cap = pbw_cap;
    t.tree_cap = tree_cap;
    return t;
  }
};

// Raw flag values; empty means "not given".
struct Flags {
  std::map<std::string, std::string> values;
  std::string config;
};

int to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("--" + key + " expects an integer, got '" + v + "'");
  }
}

Settings resolve(const Flags& f, const std::string& command) {
  std::map<std::string, std::string> v;
  if (!f.config.empty()) {
    ConfigFile cfg = read_config(f.config);
    for (const auto& sec : {std::string("defaults"), command})
      if (auto it = cfg.find(sec); it != cfg.end())
        for (const auto& [key, val] : it->second) v[key] = val;
  }
  for (const auto& [key, val] : f.values) v[key] = val;

  Settings s;
  for (const auto& [key, val] : v) {
    s.given.insert(key);
    if (key == "algebra") s.algebra = val;
    else if (key == "k") s.k = to_int(key, val);
    else if (key == "N") s.N = to_int(key, val);
    else if (key == "weight") s.weight = to_int(key, val);
    else if (key == "pbw-cap") s.pbw_cap = to_int(key, val);
    else if (key == "tree-cap") s.tree_cap = to_int(key, val);
    else if (key == "n") s.n = to_int(key, val);
    else if (key == "samples") s.samples = to_int(key, val);
    else if (key == "seed") s.seed = static_cast<unsigned>(to_int(key, val));
    else if (key == "format") s.format = val;
    else if (key == "name") s.name = val;
    else if (key == "max") s.max = to_int(key, val);
    else if (key == "timing") s.timing = val == "1" || val == "true" || val == "yes";
  }
  if (s.pbw_cap < 1 || s.pbw_cap > 8) throw ConfigError("pbw-cap must be in 1..8");
  if (s.tree_cap < 1 || s.tree_cap > trees::kMaxSize) throw ConfigError("tree-cap must be in 1..10");
  if (s.n < 0 || s.n > 4) throw ConfigError("n must be in 0..4");
  if (s.samples < 1) throw ConfigError("samples must be >= 1");
  if (s.N < 0) throw ConfigError("N must be >= 0 (0: infinite order)");
  if (s.max < 1 || s.max > trees::kMaxSize) throw ConfigError("max must be in 1..10");
  if (s.format != "text" && s.format != "json") throw ConfigError("format must be json or text");
  if (!s.algebra.empty()) {
    auto names = algebra_names();
    bool known = std::find(names.begin(), names.end(), s.algebra) != names.end();
    if (!known) {
      try {
        algebra_by_name(s.algebra);
      } catch (const std::exception&) {
        throw ConfigError("unknown algebra '" + s.algebra + "'");
      }
    }
  }
  return s;
}

// ---- reports ------------------------------------------------------------------------------

class Reporter {
 public:
  Reporter(const Settings& s, std::string command) : s_(s), command_(std::move(command)) {}

  void params(json p) { params_ = std::move(p); }

  void add(const CheckReport& r, const std::string& algebra, const std::string& status = {}) {
    std::string st = status.empty() ? (r.pass ? "pass" : "fail") : status;
    if (st == "fail") failed_ = true;
    json j;
    j["command"] = command_;
    j["check"] = r.check;
    j["algebra"] = algebra;
    j["parameters"] = params_;
    j["status"] = st;
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.detail.empty()) j["detail"] = r.detail;
    j["count"] = r.count;
    emit(j);
  }
  void add_all(const std::vector<CheckReport>& rs, const std::string& algebra) {
    for (const auto& r : rs) add(r, algebra);
  }

  // Free-form line (pages, trees, eval).
  void emit(json j) {
    if (s_.timing) {
      auto now = std::chrono::steady_clock::now();
      j["timing_ms"] = std::chrono::duration<double, std::milli>(now - last_).count();
      last_ = now;
    }
    if (s_.format == "json") {
      std::cout << j.dump() << "\n";
      return;
    }
    if (j.contains("status")) {
      std::string st = j["status"];
      std::cout << (st == "pass" ? "PASS " : st == "fail" ? "FAIL " : "CAP  ") << j.value("check", "");
      if (j.contains("algebra") && !j["algebra"].get<std::string>().empty())
        std::cout << " [" << j["algebra"].get<std::string>() << "]";
      if (j.contains("witness")) std::cout << "  witness: " << j["witness"].get<std::string>();
      if (j.contains("detail")) std::cout << "  (" << j["detail"].get<std::string>() << ")";
      if (j.contains("timing_ms")) std::cout << "  " << j["timing_ms"].get<double>() << " ms";
      std::cout << "\n";
    } else if (j.contains("text")) {
      std::cout << j["text"].get<std::string>() << "\n";
    } else {
      std::cout << j.dump() << "\n";
    }
  }

  bool failed() const { return failed_; }

 private:
  const Settings& s_;
  std::string command_;
  json params_ = json::object();
  bool failed_ = false;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::string require_algebra(const Settings& s, const std::string& fallback = {}) {
  if (!s.algebra.empty()) return s.algebra;
  if (!fallback.empty()) return fallback;
  throw ConfigError("--algebra is required");
}

std::shared_ptr<const PbwAlgebra> with_modulus(const std::string& name, int N) {
  if (N > 0 && (name == "h1dag" || name == "hckdag" || name == "K"))
    return algebra_by_name((name == "K" ? "KmodN:" : name + "N:") + std::to_string(N));
  return algebra_by_name(name);
}

// ---- commands ---------------------------------------------------------------------------------

void verify_hopf(const Settings& s, Reporter& out) {
  auto H = with_modulus(require_algebra(s), s.N);
  out.params({{"pbw-cap", s.pbw_cap}, {"tree-cap", s.tree_cap}});
  out.add_all(check_hopf(*H, s.truncation()), H->name());
}

void verify_mpi(const Settings& s, Reporter& out) {
  auto H = with_modulus(require_algebra(s), s.N);
  out.params({{"k", s.k}, {"pbw-cap", s.pbw_cap}, {"tree-cap", s.tree_cap}});
  out.add(check_mpi(*H, delta_pair(*H, s.k), s.truncation()), H->name());
}

void verify_cocycle(const Settings& s, const std::string& expression, Reporter& out) {
  std::string text = expression;
  std::string algebra = s.algebra;
  int k = s.k;
  int level = s.n;
  if (!s.name.empty()) {
    const NamedCocycle* c = find_cocycle(s.name);
    if (!c) throw ConfigError("unknown cocycle '" + s.name + "'");
    if (!text.empty()) throw ConfigError("give either --name or an expression");
    text = c->expression;
    if (algebra.empty()) algebra = c->family;
    if (!s.has("k")) k = c->sigma_power;
    level = c->level;
  } else {
    if (text.empty()) throw ConfigError("verify cocycle needs --name or an expression");
    if (algebra.empty()) throw ConfigError("--algebra is required");
    if (!s.has("n")) level = static_cast<int>(std::count(text.begin(), text.end(), '#')) + 1;
  }
  auto H = with_modulus(algebra, s.N);
  StandardModule M(H, delta_pair(*H, k));
  Tensor x = level == 0 ? parse_tensor(Slots{}, text) : parse_tensor(repeat(*H, level), text);
  out.params({{"name", s.name}, {"k", k}, {"n", level}});
  out.add_all(hc::verify_cocycle(M, x, level), H->name());
}

CoactionPtr cover_setting(const std::string& base, int N, std::shared_ptr<const PbwAlgebra>& H,
                          std::shared_ptr<const PbwAlgebra>& K) {
  H = base == "h1dag" ? h1() : hck();
  K = group_algebra(N);
  return weight_coaction(*K, *H);
}

std::string base_name(const std::string& algebra, int& N) {
  for (std::string b : {"h1dag", "hckdag"}) {
    if (algebra == b) return b;
    if (algebra.rfind(b + "N:", 0) == 0) {
      N = std::stoi(algebra.substr(b.size() + 2));
      return b;
    }
  }
  return algebra;
}

void verify_bicocyclic(const Settings& s, Reporter& out) {
  int N = s.N;
  std::string base = base_name(require_algebra(s), N);
  out.params({{"n", s.n}, {"samples", s.samples}, {"seed", s.seed}, {"N", N}});
  BicocyclicPtr B;
  if (base == "h1dag" || base == "hckdag") {
    std::shared_ptr<const PbwAlgebra> H, K;
    CoactionPtr rho = cover_setting(base, N, H, K);
    B = std::make_shared<CrossedBicocyclic>(H, K, rho, ModularPair{H->delta(), H->one(), H->one()},
                                            ModularPair{counit_character(*K), K->sigma(-1), K->sigma(1)});
  } else if (base == "h1" || base == "h1s" || base == "hck") {
    B = bicrossed_data(base).bicomplex;
  } else {
    throw ConfigError("verify bicocyclic takes h1, h1s, hck (bicrossed) or h1dag, hckdag (covers)");
  }
  Truncation t = s.truncation();
  t.pbw_cap = std::min(t.pbw_cap, 2);
  t.letter_cap = std::min(t.letter_cap, 2);
  t.tree_cap = std::min(t.tree_cap, 2);
  out.add_all(check_bicocyclic(B, s.n, s.n, s.samples, s.seed, t), s.algebra);
  out.add_all(check_total(B, s.n + 1, s.samples, s.seed, t), s.algebra);
}

void verify_homotopy(const Settings& s, Reporter& out) {
  std::string a = require_algebra(s);
  if (a != "h1" && a != "h1s" && a != "hck") throw ConfigError("verify homotopy takes h1, h1s or hck");
  auto H = algebra_by_name(a);
  CartanOperators ops(H, delta_pair(*H, 0), right_multiplication(H, *H->generator("Y"), "D_Y"));
  Truncation t = s.truncation();
  t.pbw_cap = std::min(t.pbw_cap, 2);
  t.letter_cap = std::min(t.letter_cap, 2);
  t.tree_cap = std::min(t.tree_cap, 2);
  out.params({{"n", s.n}, {"samples", s.samples}, {"seed", s.seed}});
  out.add_all(check_coderivation(ops.coderivation(), t), a);
  out.add(check_lie_is_ad(ops, *H->generator("Y"), std::min(s.n, 2), t), a);
  out.add_all(verify_homotopy_formula(ops, s.n, s.samples, s.seed, t), a);
}

void pages(const Settings& s, Reporter& out) {
  std::string a = require_algebra(s);
  auto d = bicrossed_data(a);
  auto entries = weight_pages(a, s.weight, s.pbw_cap, PageLabels::diagram);
  std::map<int, json> by_page;
  for (const auto& e : entries) {
    Slots slots(static_cast<std::size_t>(e.p), d.F.get());
    for (int i = 0; i < e.q; ++i) slots.push_back(d.U.get());
    json reps = json::array();
    for (const auto& r : e.representatives) reps.push_back(format(slots, r));
    by_page[e.page].push_back({{"p", e.p}, {"q", e.q}, {"dim", e.dim}, {"representatives", reps}});
  }
  for (auto& [page, list] : by_page) {
    if (s.format == "json") {
      out.emit({{"algebra", a}, {"weight", s.weight}, {"page", page}, {"entries", list}});
      continue;
    }
    std::ostringstream os;
    os << "E_" << page << " of " << a << ", weight " << s.weight << ":";
    for (const auto& e : list)
      if (e["dim"].get<int>() > 0) {
        os << "\n  (" << e["p"] << "," << e["q"] << ") dim " << e["dim"];
        for (const auto& r : e["representatives"]) os << "  [" << r.get<std::string>() << "]";
      }
    out.emit({{"text", os.str()}});
  }
}

void cotor(const Settings& s, Reporter& out) {
  int N = s.N;
  std::string base = base_name(require_algebra(s, "h1dag"), N);
  if (base == "h1dag") base = "h1";
  if (base == "hckdag") base = "hck";
  if (N < 2) throw ConfigError("cotor needs a finite cover: --N >= 2 or an h1dagN:<N> algebra");
  Truncation t = s.truncation();
  t.pbw_cap = std::min(t.pbw_cap, 2);
  t.letter_cap = std::min(t.letter_cap, 2);
  t.tree_cap = std::min(t.tree_cap, 2);
  out.params({{"N", N}, {"k", s.k}});
  CotorReport r = cotor_pages(base, N, s.k, t);
  std::string alg = base + "dagN:" + std::to_string(N);
  out.add_all(r.checks, alg);
  CheckReport v{"surviving weight"};
  std::ostringstream os;
  os << "weights mod " << N << " with nonzero row cohomology:";
  for (int w : r.surviving) os << " " << w;
  os << "; " << r.verdict;
  v.detail = os.str();
  v.count = 1;
  out.add(v, alg);
}

void transfer(const Settings& s, Reporter& out) {
  std::vector<std::string> names = s.name.empty() ? transfer_names() : std::vector<std::string>{s.name};
  out.params({{"N", s.N}});
  for (const auto& nm : names) {
    Transfer tr = transfer_class(nm, s.N);
    for (auto c : tr.checks) {
      c.check = nm + ": " + c.check;
      if (c.witness.empty()) c.witness = tr.formatted;
      out.add(c, tr.algebra);
    }
    // nontriviality is only evidence: no (b+B)-preimage among capped cochains
    auto target = algebra_by_name(tr.algebra);
    StandardModule M(target, delta_pair(*target, tr.sigma_power));
    // sigma powers in every slot make level-3 pools of the covers too large
    MembershipCaps caps = tr.sigma_power == 0 ? MembershipCaps{} : MembershipCaps{2, 2};
    Membership m = coboundary_membership(M, {{tr.level, tr.cochain}}, caps);
    CheckReport c{nm + ": nontrivial class"};
    c.count = 1;
    c.detail = m.note;
    if (m.member) c.fail(tr.formatted, "(b+B)-exact: " + format(M, m.preimage));
    out.add(c, tr.algebra, m.member ? "fail" : m.conclusive ? "pass" : "evidence-at-cap");
  }
}

void trees_cmd(const Settings& s, Reporter& out) {
  auto counts = trees::count_by_size(s.max);
  json sizes = json::array();
  std::ostringstream os;
  for (int n = 1; n <= s.max; ++n) {
    sizes.push_back(counts.at(static_cast<std::size_t>(n - 1)));
    os << (n > 1 ? "," : "") << counts.at(static_cast<std::size_t>(n - 1));
  }
  if (s.format == "json")
    out.emit({{"max", s.max}, {"counts", sizes}});
  else
    out.emit({{"text", os.str()}});
}

void eval(const Settings& s, const std::string& expression, Reporter& out) {
  if (expression.empty()) throw ConfigError("eval needs an expression");
  auto H = with_modulus(require_algebra(s), s.N);
  std::string value;
  if (expression.find('#') == std::string::npos) {
    value = format(*H, parse_element(*H, expression));
  } else {
    int level = static_cast<int>(std::count(expression.begin(), expression.end(), '#')) + 1;
    value = format(repeat(*H, level), parse_tensor(repeat(*H, level), expression));
  }
  if (s.format == "json")
    out.emit({{"algebra", H->name()}, {"input", expression}, {"value", value}});
  else
    out.emit({{"text", value}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf cyclic cohomology of codimension-one transverse symmetry: verification front end"};
  app.require_subcommand(1);

  Flags flags;
  std::map<std::string, std::string> raw;
  std::string expression;
  bool timing = false;

  auto add_common = [&](CLI::App* sub) {
    for (const auto& key : kKeys) {
      if (key == "timing") continue;
      sub->add_option("--" + key, raw[key]);
    }
    sub->add_flag("--timing", timing, "add wall-clock timing to every report line");
    sub->add_option("--config", flags.config, "flat key = value file; flags take precedence");
  };

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  std::map<std::string, CLI::App*> subs;
  for (std::string v : {"hopf", "mpi", "cocycle", "bicocyclic", "homotopy"}) {
    auto* sub = verify->add_subcommand(v);
    add_common(sub);
    subs["verify " + v] = sub;
  }
  subs["verify cocycle"]->add_option("expression", expression, "cochain, slots separated by #");
  for (std::string c : {"pages", "cotor", "transfer", "trees", "eval"}) {
    auto* sub = app.add_subcommand(c);
    add_common(sub);
    subs[c] = sub;
  }
  subs["eval"]->add_option("expression", expression, "element or tensor");

  CLI11_PARSE(app, argc, argv);

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;

  try {
    for (const auto& [key, val] : raw)
      if (!val.empty() || subs[command]->count("--" + key)) flags.values[key] = val;
    if (timing) flags.values["timing"] = "1";
    Settings s = resolve(flags, command);
    Reporter out(s, command);
    if (command == "verify hopf") verify_hopf(s, out);
    else if (command == "verify mpi") verify_mpi(s, out);
    else if (command == "verify cocycle") verify_cocycle(s, expression, out);
    else if (command == "verify bicocyclic") verify_bicocyclic(s, out);
    else if (command == "verify homotopy") verify_homotopy(s, out);
    else if (command == "pages") pages(s, out);
    else if (command == "cotor") cotor(s, out);
    else if (command == "transfer") transfer(s, out);
    else if (command == "trees") trees_cmd(s, out);
    else if (command == "eval") eval(s, expression, out);
    return out.failed() ? 1 : 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

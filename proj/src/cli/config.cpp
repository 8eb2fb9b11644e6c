#include "kakeyalab/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "kakeyalab/error.hpp"

namespace kl::cli {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double to_double(const std::string& v) {
  std::size_t pos = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &pos);
  } catch (...) {
    throw ValidationError("not a number: '" + v + "'");
  }
  if (pos != v.size() || !std::isfinite(x)) throw ValidationError("not a number: '" + v + "'");
  return x;
}

long long to_int(const std::string& v) {
  std::size_t pos = 0;
  long long x = 0;
  try {
    x = std::stoll(v, &pos);
  } catch (...) {
    throw ValidationError("not an integer: '" + v + "'");
  }
  if (pos != v.size()) throw ValidationError("not an integer: '" + v + "'");
  return x;
}

double dyadic_or_real(const std::string& v) {
  if (v.rfind("2^", 0) == 0) return std::ldexp(1.0, static_cast<int>(to_int(v.substr(2))));
  return to_double(v);
}

int dyadic_level_of(double v) {
  int e = 0;
  const double m = std::frexp(v, &e);
  if (m != 0.5) throw ValidationError("not dyadic");
  return 1 - e;
}

const std::set<std::string> kKinds = {"curved-kakeya", "mlk", "broadnarrow", "boxdim",
                                      "sharpness", "lift", "pipeline"};

using Setter = std::function<void(ExperimentConfig&, const std::string&)>;

struct KeySpec {
  KeyDoc doc;
  Setter set;
};

const std::vector<KeySpec>& specs() {
  static const std::vector<KeySpec> s = {
      {{"kind", "", "curved-kakeya | mlk | broadnarrow | boxdim | sharpness | lift | pipeline"},
       [](ExperimentConfig& c, const std::string& v) {
         if (!kKinds.count(v)) throw ValidationError("unknown kind '" + v + "'");
         c.kind = v;
       }},
      {{"d", "", "ambient dimension, 2 to 4"},
       [](ExperimentConfig& c, const std::string& v) { c.d = static_cast<int>(to_int(v)); }},
      {{"k", "", "plane dimension, 1 <= k <= d-1"},
       [](ExperimentConfig& c, const std::string& v) { c.k = static_cast<int>(to_int(v)); }},
      {{"beta", "1", "parameter dimension in [0, 1]; accepts log2/log3"},
       [](ExperimentConfig& c, const std::string& v) {
         c.beta = v == "log2/log3" ? std::log(2.0) / std::log(3.0) : to_double(v);
       }},
      {{"deltas", "2^-4,2^-5,2^-6", "comma-separated dyadic scales, strictly decreasing; 2^-a..2^-b expands"},
       [](ExperimentConfig& c, const std::string& v) {
         c.deltas.clear();
         std::stringstream ss(v);
         std::string item;
         while (std::getline(ss, item, ',')) {
           item = trim(item);
           const auto dots = item.find("..");
           if (dots != std::string::npos) {
             const int a = dyadic_level_of(parse_dyadic(item.substr(0, dots)));
             const int b = dyadic_level_of(parse_dyadic(item.substr(dots + 2)));
             for (int j = a; j <= b; ++j) c.deltas.push_back(std::ldexp(1.0, -j));
           } else {
             c.deltas.push_back(parse_dyadic(item));
           }
         }
       }},
      {{"h_ratio", "4", "h = delta / h_ratio; 2, 4 or 8"},
       [](ExperimentConfig& c, const std::string& v) { c.h_ratio = to_double(v); }},
      {{"rho", "2^-4", "transversality scale in (0, 1)"},
       [](ExperimentConfig& c, const std::string& v) { c.rho = dyadic_or_real(v); }},
      {{"family", "lines", "lines | parabolas | geodesic-euclidean | geodesic-hyperbolic | geodesic-perturbed | file:<path>"},
       [](ExperimentConfig& c, const std::string& v) {
         static const std::set<std::string> names = {"lines", "parabolas", "geodesic-euclidean",
                                                    "geodesic-hyperbolic", "geodesic-perturbed"};
         if (!names.count(v) && v.rfind("file:", 0) != 0)
           throw ValidationError("unknown family '" + v + "'");
         c.family = v;
       }},
      {{"tubes", "64", "tubes per family"},
       [](ExperimentConfig& c, const std::string& v) { c.tubes = static_cast<int>(to_int(v)); }},
      {{"bend", "1", "parabola bend"},
       [](ExperimentConfig& c, const std::string& v) { c.bend = to_double(v); }},
      {{"seed", "1", "64-bit seed"},
       [](ExperimentConfig& c, const std::string& v) {
         std::size_t pos = 0;
         try {
           c.seed = std::stoull(v, &pos);
         } catch (...) {
           pos = 0;
         }
         if (pos != v.size() || v.empty() || v[0] == '-') throw ValidationError("not a seed: '" + v + "'");
       }},
      {{"out", "out", "output directory"},
       [](ExperimentConfig& c, const std::string& v) { c.out = v; }},
      {{"geometry", "sphere", "sharpness model: sphere | hyperbolic | euclidean"},
       [](ExperimentConfig& c, const std::string& v) {
         if (v != "sphere" && v != "hyperbolic" && v != "euclidean")
           throw ValidationError("unknown geometry '" + v + "'");
         c.geometry = v;
       }},
      {{"depth", "6", "Cantor depth, 0 to 20"},
       [](ExperimentConfig& c, const std::string& v) { c.depth = static_cast<int>(to_int(v)); }},
      {{"spacing", "2^-5", "sample spacing of the sharpness examples"},
       [](ExperimentConfig& c, const std::string& v) { c.spacing = dyadic_or_real(v); }},
      {{"fixture", "cantor", "boxdim fixture: cantor | segment | point"},
       [](ExperimentConfig& c, const std::string& v) {
         if (v != "cantor" && v != "segment" && v != "point")
           throw ValidationError("unknown fixture '" + v + "'");
         c.fixture = v;
       }},
      {{"lift_set", "cantor", "lift line set: line | cantor | circle"},
       [](ExperimentConfig& c, const std::string& v) {
         if (v != "line" && v != "cantor" && v != "circle")
           throw ValidationError("unknown lift_set '" + v + "'");
         c.lift_set = v;
       }},
      {{"eps", "0.05", "pipeline exponent loss, in (0, 1)"},
       [](ExperimentConfig& c, const std::string& v) { c.eps = to_double(v); }},
      {{"h_min", "2^-6", "finest box-counting scale"},
       [](ExperimentConfig& c, const std::string& v) { c.h_min = parse_dyadic(v); }},
      {{"h_max", "2^-1", "coarsest box-counting scale"},
       [](ExperimentConfig& c, const std::string& v) { c.h_max = parse_dyadic(v); }},
      {{"record_wall_time", "false", "fill wall_ms (breaks byte-identical replays)"},
       [](ExperimentConfig& c, const std::string& v) {
         if (v != "true" && v != "false") throw ValidationError("expected true or false");
         c.record_wall_time = v == "true";
       }},
  };
  return s;
}

}  // namespace

double parse_dyadic(const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  try {
    v = dyadic_or_real(t);
  } catch (const ValidationError&) {
    throw ValidationError("not a dyadic scale: '" + t + "'");
  }
  int e = 0;
  if (!(v > 0.0) || std::frexp(v, &e) != 0.5 || !(v < 1.0))
    throw ValidationError("not a dyadic scale 2^-j with j >= 1: '" + t + "'");
  return v;
}

const std::vector<KeyDoc>& config_keys() {
  static const std::vector<KeyDoc> docs = [] {
    std::vector<KeyDoc> d;
    for (const auto& s : specs()) d.push_back(s.doc);
    return d;
  }();
  return docs;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string ExperimentConfig::normalized() const {
  std::map<std::string, std::string> kv;
  kv["kind"] = kind;
  kv["d"] = std::to_string(d);
  kv["k"] = std::to_string(k);
  kv["beta"] = real(beta);
  std::string ds;
  for (double x : deltas) ds += (ds.empty() ? "" : ",") + real(x);
  kv["deltas"] = ds;
  kv["h_ratio"] = real(h_ratio);
  kv["rho"] = real(rho);
  kv["family"] = family;
  kv["tubes"] = std::to_string(tubes);
  kv["bend"] = real(bend);
  kv["seed"] = std::to_string(seed);
  kv["out"] = out;
  kv["geometry"] = geometry;
  kv["depth"] = std::to_string(depth);
  kv["spacing"] = real(spacing);
  kv["fixture"] = fixture;
  kv["lift_set"] = lift_set;
  kv["eps"] = real(eps);
  kv["h_min"] = real(h_min);
  kv["h_max"] = real(h_max);
  kv["record_wall_time"] = record_wall_time ? "true" : "false";
  std::string s;
  for (const auto& [k, v] : kv) s += k + "=" + v + "\n";
  return s;
}

std::string ExperimentConfig::run_id() const {
  std::string n = normalized();
  // The output directory does not change the experiment.
  const auto a = n.find("\nout=");
  if (a != std::string::npos) n.erase(a + 1, n.find('\n', a + 1) - a);
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(n)));
  return buf;
}

ExperimentConfig validate_config(const std::string& text) {
  ExperimentConfig c;
  std::map<std::string, int> line_of;
  for (const auto& s : specs())
    if (!s.doc.default_value.empty()) s.set(c, s.doc.default_value);
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ValidationError("line " + std::to_string(no) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = std::find_if(specs().begin(), specs().end(),
                                 [&](const KeySpec& s) { return s.doc.key == key; });
    if (it == specs().end())
      throw UnknownParameterError("line " + std::to_string(no) + ": unknown key '" + key + "'");
    if (line_of.count(key))
      throw ValidationError("line " + std::to_string(no) + ": duplicate key '" + key + "'");
    line_of[key] = no;
    try {
      it->set(c, value);
    } catch (const Error& e) {
      throw ValidationError("line " + std::to_string(no) + ": " + key + ": " + e.what());
    }
  }
  auto where = [&](const std::string& key) {
    return line_of.count(key) ? "line " + std::to_string(line_of[key]) + ": " : std::string("config: ");
  };
  std::vector<std::string> bad;
  for (const char* req : {"kind", "d", "k"})
    if (!line_of.count(req)) bad.push_back("config: missing required key '" + std::string(req) + "'");
  if (line_of.count("d") && (c.d < 2 || c.d > 4)) bad.push_back(where("d") + "d must lie in [2, 4]");
  if (line_of.count("k") && line_of.count("d") && (c.k < 1 || c.k > c.d - 1))
    bad.push_back(where("k") + "k violates 1 <= k <= d-1");
  if (!(c.beta >= 0.0 && c.beta <= 1.0)) bad.push_back(where("beta") + "beta must lie in [0, 1]");
  if (c.deltas.empty()) bad.push_back(where("deltas") + "the delta ladder is empty");
  for (std::size_t i = 1; i < c.deltas.size(); ++i)
    if (!(c.deltas[i] < c.deltas[i - 1])) {
      bad.push_back(where("deltas") + "the delta ladder must be strictly decreasing");
      break;
    }
  if (c.h_ratio != 2.0 && c.h_ratio != 4.0 && c.h_ratio != 8.0)
    bad.push_back(where("h_ratio") + "h_ratio must be 2, 4 or 8");
  if (!(c.rho > 0.0 && c.rho < 1.0)) bad.push_back(where("rho") + "rho must lie in (0, 1)");
  if (c.tubes < 1 || c.tubes > 100000) bad.push_back(where("tubes") + "tubes must lie in [1, 100000]");
  if (c.depth < 0 || c.depth > 20) bad.push_back(where("depth") + "depth must lie in [0, 20]");
  if (!(c.spacing > 0.0 && c.spacing <= 0.5)) bad.push_back(where("spacing") + "spacing must lie in (0, 1/2]");
  if (!(c.eps > 0.0 && c.eps < 1.0)) bad.push_back(where("eps") + "eps must lie in (0, 1)");
  if (!(c.h_min < c.h_max)) bad.push_back(where("h_min") + "h_min must be below h_max");
  if (!bad.empty()) {
    std::string msg;
    for (const auto& b : bad) msg += (msg.empty() ? "" : "\n") + b;
    throw ValidationError(msg);
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return validate_config(ss.str());
}

}  // namespace kl::cli

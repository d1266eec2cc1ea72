#pragma once

#include "demflag/cache.hpp"
#include "demflag/io.hpp"

#include <iostream>
#include <map>

namespace demflag::cli {

inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kValidation = 2, kDomain = 3, kCacheIo = 4 };

/// Parsed command line.  `params` holds the raw option strings keyed by flag
/// name without dashes ("lambda", "level", ...); factors keep their order.
struct CommandRequest {
  std::string command;
  std::string type;
  std::map<std::string, std::string> params;
  std::vector<std::string> factors;
  Format format = Format::Json;
  bool use_cache = true;
  std::string cache_dir;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"demazure-char", "demazure-dim", "weyl-char",     "flag",
                                              "level-flag",    "local-weyl",   "crystal-check", "joseph",
                                              "weyl-finite",   "dim-check"};
  return names;
}

namespace detail {

/// Allowed and required parameters per subcommand.
struct Schema {
  std::vector<std::string> allowed;
  std::vector<std::string> required;
};

inline const std::map<std::string, Schema>& schemas() {
  static const std::map<std::string, Schema> s{
      {"demazure-char", {{"lambda", "level", "grade"}, {"lambda"}}},
      {"demazure-dim", {{"lambda", "level"}, {"lambda"}}},
      {"weyl-char", {{"lambda"}, {"lambda"}}},
      {"flag", {{"lambda"}, {"lambda"}}},
      {"level-flag", {{"lambda", "level", "to-level"}, {"lambda", "to-level"}}},
      {"local-weyl", {{}, {}}},
      {"crystal-check", {{"lambda", "level", "grade", "sigma"}, {"lambda"}}},
      {"joseph", {{"lambda", "level", "grade", "sigma", "mu"}, {"lambda", "mu"}}},
      {"weyl-finite", {{"lambda"}, {"lambda"}}},
      {"dim-check", {{"lambda"}, {"lambda"}}},
  };
  return s;
}

inline std::vector<std::int64_t> parse_ints(const std::string& what, const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      const long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError("--" + what + ": '" + tok + "' is not an integer");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline std::int64_t parse_int(const CommandRequest& req, const std::string& name, std::int64_t fallback) {
  auto it = req.params.find(name);
  if (it == req.params.end()) return fallback;
  auto v = parse_ints(name, it->second);
  if (v.size() != 1) throw ValidationError("--" + name + " expects one integer");
  return v.front();
}

inline Weight parse_weight(const std::string& name, const std::string& text, std::size_t size) {
  auto v = parse_ints(name, text);
  if (v.size() != size)
    throw ValidationError("--" + name + " expects " + std::to_string(size) + " comma-separated h-values");
  return Weight(std::move(v), 0);
}

inline void validate(const CommandRequest& req) {
  auto it = schemas().find(req.command);
  if (it == schemas().end()) throw ValidationError("unknown subcommand '" + req.command + "'");
  if (req.type.empty()) throw ValidationError("--type is required");
  const auto& sc = it->second;
  for (const auto& [k, v] : req.params)
    if (std::find(sc.allowed.begin(), sc.allowed.end(), k) == sc.allowed.end())
      throw ValidationError("--" + k + " is not accepted by " + req.command);
  for (const auto& k : sc.required)
    if (!req.params.count(k)) throw ValidationError("--" + k + " is required by " + req.command);
  if (req.command != "local-weyl" && !req.factors.empty())
    throw ValidationError("--factor is only accepted by local-weyl");
}

/// (Lambda, sigma): explicit affine data when --sigma is given, otherwise the
/// g-stable pair of D(level, lambda, grade).
inline std::pair<Weight, WeylWord> affine_target(const CommandRequest& req, const AffineDatum& ad) {
  if (req.params.count("sigma")) {
    if (req.params.count("level") || req.params.count("grade"))
      throw ValidationError("--sigma cannot be combined with --level/--grade");
    Weight lambda = parse_weight("lambda", req.params.at("lambda"), ad.dim());
    WeylWord w{};
    for (auto x : parse_ints("sigma", req.params.at("sigma"))) w.letters.push_back(static_cast<int>(x));
    check_word(ad, w);
    if (!ad.is_dominant(lambda)) throw Error(ErrorKind::NotDominant, "Lambda must be dominant");
    return {lambda, w};
  }
  const Weight lambda = parse_weight("lambda", req.params.at("lambda"), ad.finite().dim());
  return solve_extremal(ad, {parse_int(req, "level", 1), lambda, parse_int(req, "grade", 0)});
}

inline Json header(const CommandRequest& req) { return Json{{"command", req.command}, {"type", req.type}}; }

inline Json compute(const CommandRequest& req) {
  const RootDatum rd = parse_datum(req.type);
  const AffineDatum ad = affinize(rd);
  Json doc = header(req);
  const auto& cmd = req.command;
  auto lambda = [&] { return parse_weight("lambda", req.params.at("lambda"), rd.dim()); };

  if (cmd == "demazure-char" || cmd == "demazure-dim") {
    const DemazureLabel lab{parse_int(req, "level", 1), lambda(), parse_int(req, "grade", 0)};
    const auto [Lambda, sigma] = solve_extremal(ad, lab);
    const auto ch = demazure_character(ad, lab);
    doc["level"] = lab.level;
    doc["lambda"] = to_json(lab.lambda, false);
    if (cmd == "demazure-char") {
      doc["grade"] = lab.grade;
      doc["Lambda"] = to_json(Lambda, true);
      doc["sigma"] = to_json(sigma);
      doc["character"] = to_json(ch);
    }
    doc["dim"] = ch.mass();
  } else if (cmd == "weyl-char" || cmd == "flag") {
    const Weight lam = lambda();
    const auto gw = graded_weyl_character(rd, lam);
    doc["lambda"] = to_json(lam, false);
    if (cmd == "weyl-char") {
      doc["character"] = to_json(gw.character);
      doc["dim"] = gw.character.mass();
    }
    doc["flag"] = to_json(gw.flag);
  } else if (cmd == "level-flag") {
    const Weight lam = lambda();
    const std::int64_t from = parse_int(req, "level", 1), to = parse_int(req, "to-level", 0);
    doc["lambda"] = to_json(lam, false);
    doc["level"] = from;
    doc["flag"] = to_json(level_flag(ad, from, to, lam));
  } else if (cmd == "local-weyl") {
    std::vector<DominantLWeight::Factor> factors;
    Json fj = Json::array();
    for (const auto& f : req.factors) {
      const auto at = f.find('@');
      if (at == std::string::npos || at + 1 == f.size())
        throw ValidationError("--factor expects 'lambda@label', got '" + f + "'");
      Weight lam = parse_weight("factor", f.substr(0, at), rd.dim());
      if (!rd.is_dominant(lam)) throw Error(ErrorKind::NotDominant, "factor weight must be dominant");
      factors.push_back({lam, f.substr(at + 1)});
      fj.push_back(Json{{"lambda", to_json(lam, false)}, {"point", f.substr(at + 1)}});
    }
    const auto ch = local_weyl_character(rd, DominantLWeight(std::move(factors)));
    doc["factors"] = fj;
    doc["character"] = to_json(ch, false);
    doc["dim"] = ch.mass();
  } else if (cmd == "crystal-check") {
    const auto [Lambda, sigma] = affine_target(req, ad);
    const auto ps = generate_demazure_set(ad, Lambda, sigma);
    const auto crystal = crystal_character(ps);
    const auto op = demazure_word_char(ad, sigma, Lambda);
    doc["Lambda"] = to_json(Lambda, true);
    doc["sigma"] = to_json(sigma);
    doc["paths"] = static_cast<std::int64_t>(ps.size());
    doc["operator_dim"] = op.mass();
    doc["equal"] = crystal == op;
    doc["character"] = to_json(crystal, true);
  } else if (cmd == "joseph") {
    const auto [Lambda, sigma] = affine_target(req, ad);
    const Weight mu = parse_weight("mu", req.params.at("mu"), ad.dim());
    const auto elems = joseph_highest(ad, mu, Lambda, sigma);
    Json arr = Json::array();
    for (const auto& e : elems)
      arr.push_back(Json{{"wt", to_json(e.path.weight(), true)}, {"nu", to_json(e.nu, true)}});
    doc["mu"] = to_json(mu, true);
    doc["Lambda"] = to_json(Lambda, true);
    doc["sigma"] = to_json(sigma);
    doc["elements"] = arr;
  } else if (cmd == "weyl-finite") {
    const Weight lam = lambda();
    const auto ch = weyl_character_finite(rd, lam);
    doc["lambda"] = to_json(lam, false);
    doc["character"] = to_json(ch, false);
    doc["dim"] = ch.mass();
  } else if (cmd == "dim-check") {
    const Weight lam = lambda();
    const auto dc = weyl_dim_product_check(rd, lam);
    doc["lambda"] = to_json(lam, false);
    doc["ok"] = dc.ok;
    doc["dim"] = dc.dim;
    doc["product"] = dc.product;
    doc["fundamental_dims"] = dc.fundamental_dims;
  }
  return doc;
}

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnknownType:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::InvalidArgument: return kValidation;
    default: return kDomain;
  }
}

}  // namespace detail

/// Canonical text identifying a request: everything that changes the output.
inline std::string canonical_request(const CommandRequest& req) {
  std::ostringstream os;
  os << "demflag " << kVersion << "\n" << req.type << "\n" << req.command << "\n";
  for (const auto& [k, v] : req.params) os << k << "=" << v << "\n";
  for (const auto& f : req.factors) os << "factor=" << f << "\n";
  os << "format=" << static_cast<int>(req.format) << "\n";
  return os.str();
}

/// Validates, computes (or replays from the cache) and prints the result.
/// Returns the process exit status; diagnostics go to `err` as one line.
inline int run_command(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  try {
    detail::validate(req);
    std::optional<ResultCache> cache;
    std::string key;
    if (req.use_cache) {
      cache.emplace(req.cache_dir.empty() ? ResultCache::default_dir() : std::filesystem::path(req.cache_dir));
      key = stable_hash(canonical_request(req));
      if (auto hit = cache->load(key)) {
        out << *hit;
        return kOk;
      }
    }
    const std::string text = render(detail::compute(req), req.format);
    if (cache) cache->store(key, text);
    out << text;
    return kOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return detail::exit_code_for(e.kind());
  } catch (const CacheError& e) {
    err << "error: cache: " << e.what() << "\n";
    return kCacheIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: cache: " << e.what() << "\n";
    return kCacheIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace demflag::cli

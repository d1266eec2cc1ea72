// Command-line front end: characters, dimensions and Demazure flags of
// g-stable affine Demazure modules and graded local Weyl modules.

#include "demflag/cli.hpp"

#include "CLI11.hpp"

int main(int argc, char** argv) {
  using namespace demflag;

  CLI::App app{"Exact characters and Demazure flags for untwisted affine root data"};
  app.set_version_flag("--version", std::string(cli::kVersion));
  app.require_subcommand(1);

  struct Options {
    std::string type, lambda, level, to_level, grade, sigma, mu, format = "json", cache_dir;
    std::vector<std::string> factors;
    bool no_cache = false;
  };
  Options opt;

  const std::map<std::string, std::string> help{
      {"demazure-char", "graded character of D(level, lambda, grade)"},
      {"demazure-dim", "dimension of D(level, lambda)"},
      {"weyl-char", "graded character of the local Weyl module W(lambda) and its level-1 flag"},
      {"flag", "level-1 Demazure flag of W(lambda)"},
      {"level-flag", "flag of D(level, lambda) by Demazure modules of level --to-level (simply-laced)"},
      {"local-weyl", "character of W(varpi) for --factor lambda@point arguments"},
      {"crystal-check", "path-model Demazure set versus Demazure operators"},
      {"joseph", "highest elements of b_mu (x) B^sigma(Lambda)"},
      {"weyl-finite", "Weyl character of the irreducible module V(lambda)"},
      {"dim-check", "dim W(lambda) against the product of fundamental dimensions"},
  };

  for (const auto& name : cli::subcommands()) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--type", opt.type, "root datum label, e.g. A1, C2, G2")->required();
    sub->add_option("--lambda", opt.lambda, "h-values in Bourbaki node order, comma separated");
    sub->add_option("--level", opt.level, "level (positive)");
    sub->add_option("--to-level", opt.to_level, "target level for level-flag");
    sub->add_option("--grade", opt.grade, "grade shift m");
    sub->add_option("--sigma", opt.sigma, "Weyl word over nodes 0..n, comma separated");
    sub->add_option("--mu", opt.mu, "dominant affine weight h-values over nodes 0..n");
    sub->add_option("--factor", opt.factors, "lambda@point, repeatable");
    sub->add_option("--format", opt.format, "json | csv | table")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_flag("--no-cache", opt.no_cache, "bypass the result cache");
    sub->add_option("--cache-dir", opt.cache_dir, "cache directory (default: $DEMAZURE_CACHE_DIR)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kValidation;
  }

  cli::CommandRequest req;
  req.command = app.get_subcommands().front()->get_name();
  req.type = opt.type;
  auto put = [&](const char* key, const std::string& v) {
    if (!v.empty()) req.params[key] = v;
  };
  put("lambda", opt.lambda);
  put("level", opt.level);
  put("to-level", opt.to_level);
  put("grade", opt.grade);
  put("sigma", opt.sigma);
  put("mu", opt.mu);
  req.factors = opt.factors;
  req.format = *parse_format(opt.format);
  req.use_cache = !opt.no_cache;
  req.cache_dir = opt.cache_dir;
  return cli::run_command(req, std::cout, std::cerr);
}

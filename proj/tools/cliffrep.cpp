#include "cliffrep/cli/commands.hpp"
#include "cliffrep/cli/expression.hpp"
#include "cliffrep/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace cli = cliffrep::cli;

namespace {

const std::map<std::string, cli::Format> kFormats = {
    {"text", cli::Format::Text}, {"csv", cli::Format::Csv}, {"json", cli::Format::Json}};

const std::map<std::string, cli::Suite> kSuites = {
    {"props", cli::Suite::Props}, {"tables", cli::Suite::Tables}, {"examples", cli::Suite::Examples}};

cliffrep::Signature signature_from(const std::vector<std::string>& args, std::size_t at) {
  if (args.size() < at + 2) throw cliffrep::InvalidArgument("expected p and q");
  return cli::parse_signature(args[at] + "," + args[at + 1]);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spinor representations of real Clifford algebras"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string signature;
  std::string idempotent;

  auto* tables = app.add_subcommand("tables", "Regenerate the stabilizer tables");
  std::string table = "all";
  bool search = false;
  tables->add_option("table", table, "1..5 or all")->check(CLI::IsMember({"1", "2", "3", "4", "5", "all"}));
  tables->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
  tables->add_flag("--search", search, "use the searched idempotent instead of the tabulated one");

  auto* rep = app.add_subcommand("rep", "Print [u] and [T(u)] in the spinor representation");
  std::vector<std::string> rep_args;
  rep->add_option("args", rep_args, "[p q] expression|generic")->required();
  rep->add_option("--signature", signature, "p,q");
  rep->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
  rep->add_option("--idempotent", idempotent, "factor list with signs, e.g. \"+e13,+e24\"");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> verify_args;
  cli::VerifyCommand vc;
  verify->add_option("args", verify_args, "[p q | all] props|tables|examples");
  verify->add_option("--signature", signature, "p,q");
  verify->add_option("--seed", vc.seed, "sampler seed");
  verify->add_option("--max-dim", vc.max_dim, "largest n = p + q in a sweep")->check(CLI::Range(1, 16));
  verify->add_option("--samples", vc.samples, "random cases per sampled check");
  verify->add_option("--idempotent", idempotent, "factor list with signs (props, one signature)");
  verify->add_flag("--search", vc.search, "tables suite: use searched idempotents");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? cli::kSuccess : cli::kUsageError;
  }

  try {
    if (*tables) {
      int which = table == "all" ? 0 : std::stoi(table);
      return cli::cmd_tables(std::cout, which, kFormats.at(format), search);
    }
    if (*rep) {
      cliffrep::Signature sig(0, 0);
      std::string expr;
      if (!signature.empty()) {
        if (rep_args.size() != 1) throw cliffrep::InvalidArgument("expected one expression");
        sig = cli::parse_signature(signature);
        expr = rep_args[0];
      } else {
        if (rep_args.size() != 3) throw cliffrep::InvalidArgument("expected p q expression");
        sig = signature_from(rep_args, 0);
        expr = rep_args[2];
      }
      return cli::cmd_rep(std::cout, sig, expr, cli::RepOptions{kFormats.at(format), idempotent});
    }
    if (*verify) {
      std::size_t at = 0;
      if (!signature.empty()) {
        vc.signature = cli::parse_signature(signature);
      } else if (!verify_args.empty() && verify_args[0] == "all") {
        at = 1;
      } else if (verify_args.size() >= 2) {
        vc.signature = signature_from(verify_args, 0);
        at = 2;
      }
      if (verify_args.size() > at + 1) throw cliffrep::InvalidArgument("too many arguments");
      std::string suite = verify_args.size() > at ? verify_args[at] : "props";
      auto it = kSuites.find(suite);
      if (it == kSuites.end()) throw cliffrep::InvalidArgument("unknown suite '" + suite + "'");
      vc.suite = it->second;
      vc.idempotent = idempotent;
      return cli::cmd_verify(std::cout, vc);
    }
  } catch (const cliffrep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsageError;
  }
  return cli::kUsageError;
}

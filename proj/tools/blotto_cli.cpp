#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "blotto/general_lotto.hpp"
#include "blotto/io.hpp"
#include "blotto/verify.hpp"

using namespace blotto;

namespace {

Json read_json_arg(const std::string& arg) {
  std::string text = arg;
  if (arg.empty() || arg.front() != '{') {
    std::ifstream in(arg);
    if (!in) throw Error("BadArgument", "cannot read " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("BadJson", e.what());
  }
}

// First paper builder whose target equals d at budget C.
std::optional<PartitionMatrix> matching_builder(const Dist& d, long C, long K) {
  std::vector<std::pair<std::function<Dist()>, std::function<PartitionMatrix()>>> cands;
  if (C % K == 0) {
    long m = C / K;
    for (Base b : {U_ODD(), U_EVEN()})
      cands.push_back({[=] { return base_dist(b, m); }, [=] { return implement_u(b, m, C, K); }});
  }
  long m = C / K;
  cands.push_back({[=] { return target_prop4_A(m, K, C); }, [=] { return build_prop4_A(m, K, C); }});
  for (Point p : {Point::P1, Point::P2})
    cands.push_back({[=] { return target_prop5_A(m, K, C, p); }, [=] { return build_prop5_A(m, K, C, p); }});
  if (C % 2 == 1) {
    long mb = (C + 1) / 2;
    cands.push_back({[=] { return target_prop6_B(mb, K); }, [=] { return build_prop6_B(mb, K); }});
  }
  for (long mb = 1; mb <= C; ++mb) {
    cands.push_back({[=] { return target_prop3_B(mb, K, C); }, [=] { return build_prop3_B(mb, K, C); }});
    cands.push_back({[=] { return target_prop7_B(mb, K, C); }, [=] { return build_prop7_B(mb, K, C); }});
    cands.push_back({[=] { return target_prop10_B(mb, K, C); }, [=] { return build_prop10_B(mb, K, C); }});
  }
  for (auto& [target, build] : cands) {
    try {
      if (target() == d) return build();
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error("BadArgument", "cannot write " + out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for discrete Colonel Blotto games"};
  app.require_subcommand(1);

  long A = 0, B = 0, K = 0, C = 0, kmax = 5, amax = 20;
  unsigned threads = 0;
  std::string a_str, b_str, c_str, dist_arg, strategies, out;
  bool search = false;

  auto game = [&](CLI::App* s) {
    s->add_option("--a", A, "budget of player A")->required();
    s->add_option("--b", B, "budget of player B")->required();
    s->add_option("--k", K, "number of battlefields")->required();
  };
  auto* solve_cmd = app.add_subcommand("solve", "equilibrium strategies with certificate (JSON)");
  game(solve_cmd);
  auto* value_cmd = app.add_subcommand("value", "game value as p/q");
  game(value_cmd);
  auto* classify_cmd = app.add_subcommand("classify", "case tag");
  game(classify_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "best-response certificate (JSON)");
  game(verify_cmd);
  verify_cmd->add_option("--strategies", strategies, "report JSON holding matrices A and B");

  auto* impl_cmd = app.add_subcommand("implement", "partition matrix implementing a distribution");
  impl_cmd->add_option("--dist", dist_arg, "distribution JSON (inline or file)")->required();
  impl_cmd->add_option("--c", C, "budget")->required();
  impl_cmd->add_option("--k", K, "number of battlefields")->required();
  impl_cmd->add_flag("--search", search, "skip the closed-form builders");

  auto* lotto_cmd = app.add_subcommand("lotto-value", "General Lotto value");
  lotto_cmd->add_option("--a", a_str, "p/q")->required();
  lotto_cmd->add_option("--b", b_str, "p/q")->required();
  lotto_cmd->add_option("--c", c_str, "odd-mass floor p/q");

  auto* sweep_cmd = app.add_subcommand("sweep", "certify every solved instance, CSV");
  sweep_cmd->add_option("--kmax", kmax)->capture_default_str();
  sweep_cmd->add_option("--amax", amax)->capture_default_str();
  sweep_cmd->add_option("--threads", threads, "0 = hardware concurrency")->capture_default_str();
  sweep_cmd->add_option("--out", out, "CSV path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*solve_cmd) {
      emit("", to_json(solve({A, B, K})).dump(2) + "\n");
    } else if (*value_cmd) {
      emit("", to_string(blotto_value({A, B, K})) + "\n");
    } else if (*classify_cmd) {
      emit("", tag_name(classify({A, B, K}).tag) + "\n");
    } else if (*verify_cmd) {
      GameSpec s{A, B, K};
      auto [X, Y] = strategies.empty() ? equilibrium_strategies(s) : strategies_from_json(read_json_arg(strategies));
      emit("", to_json(certify(X, Y, A, B, K)).dump(2) + "\n");
    } else if (*impl_cmd) {
      Dist d = dist_from_json(read_json_arg(dist_arg));
      std::optional<PartitionMatrix> M;
      if (!search) M = matching_builder(d, C, K);
      if (!M) M = generic_implement(d, C, K);
      if (!M) throw Error("NotFound", "no implementing matrix within the search budget");
      emit("", to_json(*M).dump(2) + "\n");
    } else if (*lotto_cmd) {
      LottoSpec s{parse_rat(a_str), parse_rat(b_str), {}};
      if (!c_str.empty()) s.c = parse_rat(c_str);
      emit("", to_string(lotto_value(s)) + "\n");
    } else if (*sweep_cmd) {
      emit(out, sweep_csv(sweep_certify(kmax, amax, threads)));
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}

// tricode: build, enumerate and verify the ternary quadratic-trace codes,
// their minimum-weight support designs and the design codes.
//
// Exit codes: 0 success, 1 verification claim failure, 2 usage or guard
// error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "tricode/designs.hpp"
#include "tricode/grm.hpp"
#include "tricode/quadcode.hpp"
#include "tricode/verify.hpp"

namespace {

using namespace tricode;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

std::string matrix_json(const LinearCode& code) {
  nlohmann::ordered_json j;
  j["n"] = code.length();
  j["k"] = code.dimension();
  j["rows"] = nlohmann::ordered_json::array();
  for (const TritVec& r : code.generator_rows()) j["rows"].push_back(r.to_digits());
  return j.dump(2) + "\n";
}

std::string matrix_csv(const LinearCode& code) {
  std::ostringstream os;
  for (const TritVec& r : code.generator_rows()) {
    const std::string d = r.to_digits();
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (i) os << ',';
      os << d[i];
    }
    os << '\n';
  }
  return os.str();
}

std::string matrix_text(const LinearCode& code) {
  std::ostringstream os;
  for (const TritVec& r : code.generator_rows()) os << r.to_digits() << '\n';
  return os.str();
}

std::string design_csv(const Design& d) {
  std::ostringstream os;
  for (const auto& block : d.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) os << ',';
      os << block[i];
    }
    os << '\n';
  }
  return os.str();
}

std::string enumerator_csv(const WeightEnumerator& we, const std::string& side) {
  std::ostringstream os;
  for (std::uint32_t w = 0; w <= we.length(); ++w) {
    if (we.count(w) != 0) os << side << w << ',' << we.count(w).str() << '\n';
  }
  return os.str();
}

std::string enumerator_text(const WeightEnumerator& we) {
  std::ostringstream os;
  os << "[" << we.length() << "," << we.dimension() << "] weight distribution\n";
  for (std::uint32_t w = 0; w <= we.length(); ++w) {
    if (we.count(w) != 0) os << "  A_" << w << " = " << we.count(w).str() << '\n';
  }
  return os.str();
}

double parse_budget(const std::string& text) {
  if (text.empty()) return 0;
  std::string t = text;
  if (t.back() == 's') t.pop_back();
  std::size_t used = 0;
  const double v = std::stod(t, &used);
  if (used != t.size() || v < 0) throw CLI::ValidationError("--budget", "expected SECONDS");
  return v;
}

int run_build(unsigned m, const std::string& which, const std::string& format,
              const std::string& out, unsigned workers) {
  const Field field(m);
  if (which == "design") {
    const Design d = min_weight_design(field);
    if (format == "json") {
      write_output(out, d.to_json() + "\n");
    } else if (format == "csv") {
      write_output(out, design_csv(d));
    } else {
      std::ostringstream os;
      os << "design: v=" << d.points() << " k=" << d.block_size() << " b=" << d.block_count()
         << '\n'
         << design_csv(d);
      write_output(out, os.str());
    }
    return 0;
  }

  LinearCode code(1);
  if (which == "code") {
    code = quadratic_code(field);
  } else if (which == "design-code") {
    code = min_weight_design_code(field, workers);
  } else if (which.rfind("grm:", 0) == 0) {
    code = grm_code(field, static_cast<unsigned>(std::stoul(which.substr(4))));
  } else {
    throw CLI::ValidationError("--which", "expected code|design|design-code|grm:ORDER");
  }
  if (format == "json") {
    write_output(out, matrix_json(code));
  } else if (format == "csv") {
    write_output(out, matrix_csv(code));
  } else {
    write_output(out, matrix_text(code));
  }
  return 0;
}

int run_enumerate(unsigned m, const std::string& target, const std::string& format,
                  const std::string& out, unsigned workers) {
  const Field field(m);
  if (target == "code") {
    const WeightEnumerator we = quadratic_code(field).weight_distribution(workers);
    if (format == "json") {
      write_output(out, we.to_json() + "\n");
    } else if (format == "csv") {
      write_output(out, "weight,count\n" + enumerator_csv(we, ""));
    } else {
      write_output(out, enumerator_text(we));
    }
    return 0;
  }
  if (target != "design-code-dual") {
    throw CLI::ValidationError("--target", "expected code|design-code-dual");
  }
  const LinearCode dual = min_weight_design_code(field, workers).dual();
  const WeightEnumerator dual_we = dual.weight_distribution(workers);
  const WeightEnumerator code_we = macwilliams(dual_we);
  if (format == "json") {
    write_output(out, "{\"dual\":" + dual_we.to_json() + ",\"code\":" + code_we.to_json() + "}\n");
  } else if (format == "csv") {
    write_output(out, "side,weight,count\n" + enumerator_csv(dual_we, "dual,") +
                          enumerator_csv(code_we, "code,"));
  } else {
    write_output(out, "dual " + enumerator_text(dual_we) + "code " + enumerator_text(code_we));
  }
  return 0;
}

int run_verify(const std::vector<unsigned>& ms, const std::string& budget,
               const std::string& format, const std::string& out, unsigned workers) {
  SuiteOptions opt;
  opt.m_values = ms;
  opt.budget_seconds = parse_budget(budget);
  opt.workers = workers;
  const SuiteReport rep = run_suite(opt);
  if (format == "json") {
    write_output(out, rep.to_json());
  } else if (format == "csv") {
    write_output(out, rep.to_csv());
  } else {
    write_output(out, rep.to_text());
  }
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ternary quadratic-trace codes, support designs and design codes"};
  app.require_subcommand(1);

  std::string which, target, format = "json", out, budget;
  unsigned m = 0;
  unsigned workers = 1;
  std::vector<unsigned> ms;

  auto* build = app.add_subcommand("build", "construct an object and write it out");
  build->add_option("--m", m, "extension degree")->required()->check(CLI::Range(2u, 7u));
  build->add_option("--which", which, "code|design|design-code|grm:ORDER")->required();

  auto* enumerate = app.add_subcommand("enumerate", "exact weight enumerators");
  enumerate->add_option("--m", m, "extension degree")->required()->check(CLI::Range(2u, 7u));
  enumerate->add_option("--target", target, "code|design-code-dual")->required();

  auto* verify = app.add_subcommand("verify", "run the claim suite");
  verify->add_option("--m", ms, "extension degrees, comma separated")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(2u, 7u));
  verify->add_option("--budget", budget, "time budget in seconds");

  for (auto* sub : {build, enumerate, verify}) {
    sub->add_option("--format", format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", out, "output path (stdout when absent)");
    sub->add_option("--workers", workers, "worker thread count")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
    if (build->parsed()) return run_build(m, which, format, out, workers);
    if (enumerate->parsed()) return run_enumerate(m, target, format, out, workers);
    return run_verify(ms, budget, format, out, workers);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const infeasible_error& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

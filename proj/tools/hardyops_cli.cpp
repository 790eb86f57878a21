// Copyright 2026 The hardyops authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Everything runs through the extern-C interface in
// hardyops.h; exit code 0 means success / verdict true, 2 means a structure
// test returned verdict false, 1 means an operational error.

#include <hardyops.h>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerdictFalse = 2;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void fail(const std::string& message, int code = kExitError) {
  throw CliError{code, message};
}

void check(int rc, const std::string& context) {
  if (rc != HARDYOPS_OK) fail(context + ": " + hardyops_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot open output file: " + path);
  out << content;
}

std::string take_string(char* s) {
  std::string out(s ? s : "");
  hardyops_string_free(s);
  return out;
}

using SymbolPtr = std::unique_ptr<hardyops_symbol, decltype(&hardyops_symbol_free)>;
using MatrixPtr = std::unique_ptr<hardyops_matrix, decltype(&hardyops_matrix_free)>;
using ReportPtr = std::unique_ptr<hardyops_report, decltype(&hardyops_report_free)>;

SymbolPtr load_symbol(const std::string& path) {
  const std::string text = read_file(path);
  hardyops_symbol* s = nullptr;
  check(hardyops_symbol_parse(text.c_str(), &s), "parsing symbol " + path);
  return SymbolPtr(s, hardyops_symbol_free);
}

// theta files hold either a symbol window or a Blaschke spec; a spec is
// expanded to its Taylor window of length n.
SymbolPtr load_theta(const std::string& path, int n) {
  const std::string text = read_file(path);
  hardyops_symbol* s = nullptr;
  if (hardyops_symbol_parse(text.c_str(), &s) == HARDYOPS_OK)
    return SymbolPtr(s, hardyops_symbol_free);
  double tail = 0.0;
  check(hardyops_blaschke_coeffs(text.c_str(), n, &s, &tail),
        "parsing theta (symbol or Blaschke spec) " + path);
  std::cerr << "theta: Blaschke expansion on window " << n << ", tail bound " << tail
            << "\n";
  return SymbolPtr(s, hardyops_symbol_free);
}

MatrixPtr load_matrix(const std::string& path) {
  const std::string text = read_file(path);
  hardyops_matrix* m = nullptr;
  check(hardyops_matrix_parse(text.c_str(), &m), "parsing matrix " + path);
  return MatrixPtr(m, hardyops_matrix_free);
}

std::string matrix_output(const hardyops_matrix* m, const std::string& format) {
  char* text = nullptr;
  if (format == "csv")
    check(hardyops_matrix_to_csv(m, &text), "serializing matrix");
  else
    check(hardyops_matrix_to_json(m, &text), "serializing matrix");
  return take_string(text);
}

double resolve_tol(double flag_tol) {
  double tol = 1e-9;
  if (const char* env = std::getenv("HARDYOPS_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) tol = v;
  }
  if (flag_tol > 0.0) tol = flag_tol;
  return tol;
}

int emit_report(hardyops_report* raw, const std::string& out_path) {
  ReportPtr rep(raw, hardyops_report_free);
  char* text = nullptr;
  check(hardyops_report_to_json(rep.get(), &text), "serializing report");
  write_output(out_path, take_string(text));
  int verdict = 0;
  check(hardyops_report_verdict(rep.get(), &verdict), "reading verdict");
  return verdict ? kExitOk : kExitVerdictFalse;
}

struct GenOptions {
  std::string kind, symbol, symbol2, theta, out, format = "json";
  int n = 0, m = 0;
};

int run_gen(const GenOptions& opt) {
  hardyops_matrix* raw = nullptr;
  if (opt.kind == "toeplitz" || opt.kind == "hankel" || opt.kind == "tph" ||
      opt.kind == "theta-paired") {
    if (opt.n < 1) fail("--N is required for kind " + opt.kind);
  } else if (opt.m < 1) {
    fail("--M is required for kind " + opt.kind);
  }

  if (opt.kind == "toeplitz") {
    const SymbolPtr phi = load_symbol(opt.symbol);
    check(hardyops_gen_toeplitz(phi.get(), opt.n, &raw), "gen toeplitz");
  } else if (opt.kind == "hankel") {
    const SymbolPtr psi = load_symbol(opt.symbol);
    check(hardyops_gen_hankel(psi.get(), opt.n, &raw), "gen hankel");
  } else if (opt.kind == "tph") {
    const SymbolPtr phi = load_symbol(opt.symbol);
    const SymbolPtr psi = load_symbol(opt.symbol2);
    check(hardyops_gen_tph(phi.get(), psi.get(), opt.n, &raw), "gen tph");
  } else if (opt.kind == "paired" || opt.kind == "transposed") {
    const SymbolPtr phi = load_symbol(opt.symbol);
    const SymbolPtr psi = load_symbol(opt.symbol2);
    if (opt.kind == "paired")
      check(hardyops_gen_paired(phi.get(), psi.get(), opt.m, &raw), "gen paired");
    else
      check(hardyops_gen_transposed_paired(phi.get(), psi.get(), opt.m, &raw),
            "gen transposed");
  } else if (opt.kind == "theta-paired") {
    const SymbolPtr theta = load_theta(opt.theta, opt.n);
    const SymbolPtr phi = load_symbol(opt.symbol);
    const SymbolPtr psi = load_symbol(opt.symbol2);
    check(hardyops_gen_theta_paired(theta.get(), phi.get(), psi.get(), opt.n, &raw),
          "gen theta-paired");
  } else {
    fail("unknown gen kind: " + opt.kind);
  }

  const MatrixPtr m(raw, hardyops_matrix_free);
  write_output(opt.out, matrix_output(m.get(), opt.format));
  return kExitOk;
}

struct ClassifyOptions {
  std::string kind, matrix, theta, out;
  double tol = 0.0;
  int guard = -1;
};

int run_classify(const ClassifyOptions& opt) {
  const MatrixPtr a = load_matrix(opt.matrix);
  const double tol = resolve_tol(opt.tol);
  hardyops_report* rep = nullptr;
  if (opt.kind == "toeplitz") {
    check(hardyops_classify_toeplitz(a.get(), tol, &rep), "classify toeplitz");
  } else if (opt.kind == "hankel") {
    check(hardyops_classify_hankel(a.get(), tol, &rep), "classify hankel");
  } else if (opt.kind == "tph") {
    check(hardyops_classify_tph(a.get(), tol, &rep), "classify tph");
  } else if (opt.kind == "paired") {
    check(hardyops_classify_paired(a.get(), tol, &rep), "classify paired");
  } else if (opt.kind == "transposed") {
    check(hardyops_classify_transposed_paired(a.get(), tol, &rep), "classify transposed");
  } else if (opt.kind == "theta-paired") {
    if (opt.theta.empty()) fail("--theta is required for kind theta-paired");
    int modes = 0;
    check(hardyops_matrix_modes(a.get(), &modes), "reading matrix size");
    const SymbolPtr theta = load_theta(opt.theta, modes);
    check(hardyops_classify_theta_paired(a.get(), theta.get(), tol, opt.guard, &rep),
          "classify theta-paired");
  } else {
    fail("unknown classify kind: " + opt.kind);
  }
  return emit_report(rep, opt.out);
}

int main_impl(int argc, char** argv) {
  CLI::App app{"Finite sections of Toeplitz, Hankel, paired and model-space "
               "operators: generation, structure tests, symbol recovery"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "build an operator section from symbols");
  gen_cmd->add_option("--kind", gen.kind,
                      "toeplitz|hankel|tph|paired|transposed|theta-paired")
      ->required();
  gen_cmd->add_option("--symbol", gen.symbol, "symbol JSON file (phi)");
  gen_cmd->add_option("--symbol2", gen.symbol2, "second symbol JSON file (psi)");
  gen_cmd->add_option("--theta", gen.theta, "inner function: symbol or Blaschke JSON");
  gen_cmd->add_option("--N", gen.n, "one-sided window size");
  gen_cmd->add_option("--M", gen.m, "two-sided half window");
  gen_cmd->add_option("--out", gen.out, "output path (default stdout)");
  gen_cmd->add_option("--format", gen.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  ClassifyOptions cls;
  CLI::App* cls_cmd = app.add_subcommand("classify", "run a structure test on a matrix");
  cls_cmd->add_option("--kind", cls.kind,
                      "toeplitz|hankel|tph|paired|transposed|theta-paired")
      ->required();
  cls_cmd->add_option("--matrix", cls.matrix, "matrix JSON file")->required();
  cls_cmd->add_option("--theta", cls.theta, "inner function for theta-paired");
  cls_cmd->add_option("--tol", cls.tol, "tolerance (default 1e-9, env HARDYOPS_TOL)");
  cls_cmd->add_option("--guard", cls.guard, "override the guard band");
  cls_cmd->add_option("--out", cls.out, "report path (default stdout)");

  struct {
    std::string kind = "tph", matrix, out;
    double tol = 0.0;
  } dec;
  CLI::App* dec_cmd =
      app.add_subcommand("decompose", "split a matrix into Toeplitz + Hankel data");
  dec_cmd->add_option("--matrix", dec.matrix, "matrix JSON file")->required();
  dec_cmd->add_option("--kind", dec.kind, "tph|noninjective");
  dec_cmd->add_option("--tol", dec.tol, "tolerance");
  dec_cmd->add_option("--out", dec.out, "report path (default stdout)");

  struct {
    std::string matrix, out;
    bool transposed = false;
    double tol = 0.0;
  } par;
  CLI::App* par_cmd =
      app.add_subcommand("paired", "test a two-sided section and recover its symbols");
  par_cmd->add_option("--matrix", par.matrix, "matrix JSON file")->required();
  par_cmd->add_flag("--transposed", par.transposed, "test the transposed variant");
  par_cmd->add_option("--tol", par.tol, "tolerance");
  par_cmd->add_option("--out", par.out, "report path (default stdout)");

  struct {
    std::string kind, theta, symbol, out, format = "json", which = "model";
    int n = 0;
  } ms;
  CLI::App* ms_cmd = app.add_subcommand("modelspace", "Blaschke and model-space builders");
  ms_cmd->add_option("--kind", ms.kind, "blaschke|projection|truncated-toeplitz")->required();
  ms_cmd->add_option("--theta", ms.theta, "inner function: symbol or Blaschke JSON")
      ->required();
  ms_cmd->add_option("--symbol", ms.symbol, "symbol for truncated-toeplitz");
  ms_cmd->add_option("--N", ms.n, "window size")->required();
  ms_cmd->add_option("--which", ms.which, "projection choice: model|thetah2");
  ms_cmd->add_option("--out", ms.out, "output path (default stdout)");
  ms_cmd->add_option("--format", ms.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  struct {
    std::uint64_t seed = 42;
    bool inject_fault = false;
    std::string out;
  } st;
  CLI::App* st_cmd = app.add_subcommand("selftest", "run the seeded invariant suite");
  st_cmd->add_option("--seed", st.seed, "fixture seed (default 42)");
  st_cmd->add_flag("--inject-fault", st.inject_fault,
                   "perturb the tph fixture to prove the suite fails");
  st_cmd->add_option("--out", st.out, "report path (default stdout)");

  struct {
    std::vector<int> sizes{256, 1024, 4096};
    std::uint64_t seed = 7;
    std::string out;
  } bn;
  CLI::App* bn_cmd = app.add_subcommand("bench", "time the FFT fast paths against dense");
  bn_cmd->add_option("--sizes", bn.sizes, "section sizes")->delimiter(',');
  bn_cmd->add_option("--seed", bn.seed, "fixture seed (default 7)");
  bn_cmd->add_option("--out", bn.out, "timing table path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (gen_cmd->parsed()) return run_gen(gen);
  if (cls_cmd->parsed()) return run_classify(cls);

  if (dec_cmd->parsed()) {
    const MatrixPtr a = load_matrix(dec.matrix);
    const double tol = resolve_tol(dec.tol);
    hardyops_report* rep = nullptr;
    if (dec.kind == "tph")
      check(hardyops_decompose_tph(a.get(), tol, &rep), "decompose tph");
    else if (dec.kind == "noninjective")
      check(hardyops_pipeline_noninjective(a.get(), tol, &rep), "noninjective pipeline");
    else
      fail("unknown decompose kind: " + dec.kind);
    return emit_report(rep, dec.out);
  }

  if (par_cmd->parsed()) {
    const MatrixPtr x = load_matrix(par.matrix);
    const double tol = resolve_tol(par.tol);
    hardyops_report* rep = nullptr;
    if (par.transposed)
      check(hardyops_classify_transposed_paired(x.get(), tol, &rep), "paired test");
    else
      check(hardyops_classify_paired(x.get(), tol, &rep), "paired test");
    return emit_report(rep, par.out);
  }

  if (ms_cmd->parsed()) {
    if (ms.kind == "blaschke") {
      const std::string text = read_file(ms.theta);
      hardyops_symbol* theta = nullptr;
      double tail = 0.0;
      check(hardyops_blaschke_coeffs(text.c_str(), ms.n, &theta, &tail), "blaschke");
      const SymbolPtr guard(theta, hardyops_symbol_free);
      char* sj = nullptr;
      check(hardyops_symbol_to_json(theta, &sj), "serializing theta");
      std::ostringstream out;
      out << "{\"theta\": " << take_string(sj) << ", \"tail_bound\": " << tail << "}";
      write_output(ms.out, out.str());
      return kExitOk;
    }
    const SymbolPtr theta = load_theta(ms.theta, ms.n);
    hardyops_matrix* raw = nullptr;
    if (ms.kind == "projection") {
      const int which = ms.which == "thetah2" ? 1 : 0;
      check(hardyops_gen_model_projection(theta.get(), ms.n, which, &raw), "projection");
    } else if (ms.kind == "truncated-toeplitz") {
      if (ms.symbol.empty()) fail("--symbol is required for truncated-toeplitz");
      const SymbolPtr phi = load_symbol(ms.symbol);
      check(hardyops_gen_truncated_toeplitz(phi.get(), theta.get(), ms.n, &raw),
            "truncated toeplitz");
    } else {
      fail("unknown modelspace kind: " + ms.kind);
    }
    const MatrixPtr m(raw, hardyops_matrix_free);
    write_output(ms.out, matrix_output(m.get(), ms.format));
    return kExitOk;
  }

  if (st_cmd->parsed()) {
    std::cout << "selftest seed: " << st.seed << "\n";
    int all_pass = 0;
    char* json = nullptr;
    check(hardyops_selftest(st.seed, st.inject_fault ? 1 : 0, &all_pass, &json), "selftest");
    const std::string report = take_string(json);
    if (st.out.empty()) {
      std::cout << report << "\n";
    } else {
      write_output(st.out, report);
      std::cout << (all_pass ? "selftest: all groups passed\n"
                             : "selftest: FAILURES (see report)\n");
    }
    return all_pass ? kExitOk : kExitVerdictFalse;
  }

  if (bn_cmd->parsed()) {
    char* json = nullptr;
    check(hardyops_bench(bn.sizes.data(), static_cast<int>(bn.sizes.size()), bn.seed, &json),
          "bench");
    write_output(bn.out, take_string(json));
    return kExitOk;
  }

  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return main_impl(argc, argv);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}

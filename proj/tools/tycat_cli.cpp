// Copyright 2026 The tycat Authors
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

// Command-line front end. Everything goes through the C API.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tycat/tycat.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr const char* kToleranceEnv = "TYCAT_TOLERANCE";

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Owns a string returned by the library.
struct LibString {
  char* p = nullptr;
  ~LibString() { tycat_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct Data {
  tycat_data* p = nullptr;
  ~Data() { tycat_data_free(p); }
};

void check(tycat_status s) {
  if (s != TYCAT_OK) throw InputError(tycat_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text << "\n";
}

std::vector<std::int64_t> parse_ints(const std::string& text, char sep) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("not an integer: '" + item + "'");
    }
  }
  return out;
}

// "1" or "0,1;1,0": rows separated by ';', entries by ','.
std::vector<std::int64_t> parse_matrix(const std::string& text, std::size_t rank) {
  std::vector<std::int64_t> flat;
  std::stringstream rows(text);
  std::string row;
  std::size_t count = 0;
  while (std::getline(rows, row, ';')) {
    const auto entries = parse_ints(row, ',');
    if (entries.size() != rank) throw InputError("bicharacter row has the wrong length");
    flat.insert(flat.end(), entries.begin(), entries.end());
    ++count;
  }
  if (count != rank) throw InputError("bicharacter needs " + std::to_string(rank) + " rows");
  return flat;
}

int parse_sign(const std::string& text) {
  if (text == "+1" || text == "1" || text == "+") return 1;
  if (text == "-1" || text == "-") return -1;
  throw InputError("sign must be +1 or -1");
}

double resolve_tolerance(const std::optional<double>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kToleranceEnv)) {
    try {
      std::size_t used = 0;
      const double v = std::stod(env, &used);
      if (used != std::string(env).size() || !(v > 0)) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw InputError(std::string(kToleranceEnv) + " is not a positive number");
    }
  }
  return 1e-10;
}

Data load(const std::string& path) {
  Data d;
  check(tycat_from_json(read_file(path).c_str(), &d.p));
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tambara-Yamagami associator data: construction, verification and classification"};
  app.require_subcommand(1);

  std::string orders_text, bichar_text, sign_text = "+1", out_path, file, gauge_path;
  std::optional<double> tolerance;
  std::optional<std::uint64_t> seed;
  std::size_t size = 0;
  double param = 0.0;

  auto* construct = app.add_subcommand("construct", "write the standard data for (G, chi, sign)");
  construct->add_option("--orders", orders_text, "cyclic orders, comma separated (empty for the trivial group)")
      ->required();
  construct->add_option("--bichar", bichar_text, "bicharacter matrix, rows separated by ';'");
  construct->add_option("--sign", sign_text, "+1 or -1");
  construct->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "check every pentagon equation; exit 1 on a violation");
  verify->add_option("file", file, "TY data JSON")->required();
  verify->add_option("--tolerance", tolerance, "operator tolerance (default 1e-10)");

  auto* gauge = app.add_subcommand("gauge", "apply a gauge transformation");
  gauge->add_option("file", file, "TY data JSON")->required();
  auto* seed_opt = gauge->add_option("--seed", seed, "random unit-normalized gauge");
  auto* gauge_opt = gauge->add_option("--gauge", gauge_path, "gauge JSON file");
  seed_opt->excludes(gauge_opt);
  gauge->add_option("--out", out_path, "output file (default stdout)");

  auto* normalize = app.add_subcommand("normalize", "print the invariants (chi, sign) of coherent data");
  normalize->add_option("file", file, "TY data JSON")->required();
  normalize->add_option("--tolerance", tolerance, "operator tolerance (default 1e-10)");

  auto* classify = app.add_subcommand("classify", "list the equivalence classes for a group");
  classify->add_option("--orders", orders_text, "cyclic orders, comma separated")->required();

  auto* continuum = app.add_subcommand("continuum", "check the sampled real line structure");
  continuum->add_option("--size", size, "number of grid points (even)")->required();
  continuum->add_option("--param", param, "bicharacter parameter a (nonzero)")->required();
  continuum->add_option("--sign", sign_text, "+1 or -1");
  continuum->add_option("--tolerance", tolerance, "pentagon tolerance (default 1e-10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (construct->parsed()) {
      const auto orders = parse_ints(orders_text, ',');
      const auto m = parse_matrix(bichar_text, orders.size());
      Data d;
      check(tycat_construct(orders.data(), orders.size(), m.data(), parse_sign(sign_text), &d.p));
      LibString text;
      check(tycat_to_json(d.p, &text.p));
      write_output(text.str(), out_path);
      return kExitPass;
    }
    if (verify->parsed()) {
      const Data d = load(file);
      int pass = 0;
      LibString report;
      check(tycat_verify(d.p, resolve_tolerance(tolerance), &pass, &report.p));
      std::cout << report.str() << "\n";
      return pass ? kExitPass : kExitFail;
    }
    if (gauge->parsed()) {
      if (!seed && gauge_path.empty()) throw InputError("gauge needs --seed or --gauge");
      const Data d = load(file);
      std::string g;
      if (seed) {
        LibString s;
        check(tycat_gauge_random(d.p, *seed, &s.p));
        g = s.str();
      } else {
        g = read_file(gauge_path);
      }
      Data out;
      check(tycat_gauge_apply(d.p, g.c_str(), &out.p));
      LibString text;
      check(tycat_to_json(out.p, &text.p));
      write_output(text.str(), out_path);
      return kExitPass;
    }
    if (normalize->parsed()) {
      const Data d = load(file);
      const double tol = resolve_tolerance(tolerance);
      int pass = 0;
      check(tycat_verify(d.p, tol, &pass, nullptr));
      if (!pass) {
        std::cerr << "data does not satisfy the pentagon equations\n";
        return kExitFail;
      }
      LibString result;
      check(tycat_normalize(d.p, tol, &result.p));
      std::cout << result.str() << "\n";
      return kExitPass;
    }
    if (classify->parsed()) {
      const auto orders = parse_ints(orders_text, ',');
      std::size_t count = 0;
      LibString result;
      check(tycat_classify(orders.data(), orders.size(), &count, &result.p));
      std::cout << result.str() << "\n";
      return kExitPass;
    }
    if (continuum->parsed()) {
      int pass = 0;
      LibString report;
      check(tycat_continuum(size, param, parse_sign(sign_text), resolve_tolerance(tolerance), &pass, &report.p));
      std::cout << report.str() << "\n";
      return pass ? kExitPass : kExitFail;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

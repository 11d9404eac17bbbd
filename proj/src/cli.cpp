#include "ssg/cli.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssg/solitons.hpp"
#include "ssg/verify.hpp"

namespace ssg {

namespace {

struct Column {
  int field = 0;               // 0 phi, 1 psibar, 2 psi
  std::uint32_t sol_mask = 0;  // bit j set = soliton j+1 in the monomial
  std::string name;
};

std::string monomial_name(std::uint32_t sol_mask) {
  if (sol_mask == 0) return "1";
  std::string s;
  for (int j = 0; j < 30; ++j) {
    if (sol_mask & (1u << j)) s += "e" + std::to_string(j + 1);
  }
  return s;
}

std::vector<Column> layout_columns(int n_sol) {
  // The body sector of phi is even in the fermionic generators, psibar and
  // psi are odd; only those monomials can be populated.
  std::vector<Column> cols;
  static const char* kFields[3] = {"phi", "psibar", "psi"};
  for (int f = 0; f < 3; ++f) {
    const int want_parity = (f == 0) ? 0 : 1;
    for (std::uint32_t m = 0; m < (1u << n_sol); ++m) {
      if (std::popcount(m) % 2 != want_parity) continue;
      Column c;
      c.field = f;
      c.sol_mask = m;
      c.name = std::string(kFields[f]) + ":" + monomial_name(m);
      cols.push_back(c);
    }
  }
  return cols;
}

void append_g17(std::string& row, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  row += buf;
}

std::string render_row(const FieldFunction& field, const MarginFn& margin,
                       const std::vector<Column>& cols, double x, double t,
                       double singular_margin) {
  std::string row;
  append_g17(row, x);
  row += ',';
  append_g17(row, t);

  bool singular = margin(x, t) < singular_margin;
  GrassmannNumber parts[3] = {GrassmannNumber(field.generators()),
                              GrassmannNumber(field.generators()),
                              GrassmannNumber(field.generators())};
  if (!singular) {
    try {
      const SuperfieldValue v = field(x, t);
      parts[0] = v.phi();
      parts[1] = v.psibar();
      parts[2] = v.psi();
    } catch (const SingularPoint&) {
      singular = true;
    }
  }

  row += singular ? ",1" : ",0";
  for (const Column& c : cols) {
    if (singular) {
      row += ",,";
      continue;
    }
    const Jet& j = parts[c.field].coeff(c.sol_mask << 2);
    row += ',';
    append_g17(row, j.v.real());
    row += ',';
    append_g17(row, j.v.imag());
  }
  row += '\n';
  return row;
}

}  // namespace

int cmd_generate(const RunConfig& config, const std::string& out_path,
                 int min_solitons, ExecPolicy policy) {
  validate_config(config);
  const int n_sol = int(config.solitons.size());
  if (n_sol < min_solitons) {
    throw ConfigError("this command needs at least " +
                      std::to_string(min_solitons) + " solitons, got " +
                      std::to_string(n_sol));
  }

  LatticeOptions opts;
  opts.window = config_window(config);
  opts.seed = config.seed;
  opts.certify = false;
  opts.policy = policy;
  const LatticeNode node = bianchi_lattice(config.solitons, opts);

  const std::vector<Column> cols = layout_columns(n_sol);
  const std::vector<double> xs =
      linspace(config.grid.xmin, config.grid.xmax, config.grid.nx);
  const std::vector<double> ts =
      linspace(config.grid.tmin, config.grid.tmax, config.grid.nt);

  std::vector<std::string> rows(xs.size() * ts.size());
  for_each_index(rows.size(), policy, [&](std::size_t i) {
    const double x = xs[i / ts.size()];
    const double t = ts[i % ts.size()];
    rows[i] = render_row(node.field, node.margin, cols, x, t,
                         config.singular_margin);
  });

  std::ofstream file;
  const bool to_stdout = out_path.empty() || out_path == "-";
  if (!to_stdout) {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot open '" + out_path + "'");
  }
  std::ostream& out = to_stdout ? std::cout : file;

  std::string header = "x,t,singular";
  for (const Column& c : cols) header += "," + c.name + ":re," + c.name + ":im";
  out << header << "\n";
  for (const std::string& r : rows) out << r;
  out.flush();
  if (!to_stdout && !file) {
    throw std::runtime_error("write failed for '" + out_path + "'");
  }
  return 0;
}

int cmd_verify(const RunConfig& config, const std::string& suite,
               const std::string& report_path, std::ostream& log,
               ExecPolicy policy) {
  const ResidualReport report = run_suite(config, suite, VerifyHooks{}, policy);
  log << report.to_text();
  if (!report_path.empty()) {
    std::ofstream file(report_path);
    if (!file) throw std::runtime_error("cannot open '" + report_path + "'");
    file << report.to_json();
    if (!file) {
      throw std::runtime_error("write failed for '" + report_path + "'");
    }
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace ssg

#pragma once

#include "hua/luqikeng.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hua {

// One published cell of the threshold table for the bases of dimension 2 to 4.
struct ReferenceCell {
  std::string type;     // catalog name
  std::string column;   // column heading as printed, e.g. "III_2 = IV_3"
  int m = 1;
  int index = 1;        // 1 for μ_{m,1}, 2 for μ_{m,2}
  bool finite = true;
  std::string printed;  // text of the cell
  double value = 0;     // reference value (meaningful when finite)
  std::string closed_form;                  // empty if the cell is only numeric
  std::function<BigFloat()> closed_value;   // high-precision value of closed_form
  std::string note;
};

const std::vector<ReferenceCell>& reference_cells();

struct TableRow {
  ReferenceCell cell;
  RootValue computed;
  double deviation = 0;                       // |computed - value|, finite cells
  std::optional<BigFloat> closed_deviation;   // |computed - closed form|
  bool matches = false;
};

struct TableReproduction {
  std::vector<TableRow> rows;
  int finite_cells = 0;
  int matched = 0;
  double numeric_tolerance = 5e-5;
  double closed_form_tolerance = 1e-9;
};

// Recomputes every cell; thresholds are refined to tol.
TableReproduction reproduce_table(const Rational& tol = Rational(1, 1000000000000L),
                                  double numeric_tolerance = 5e-5, double closed_form_tolerance = 1e-9);

}  // namespace hua

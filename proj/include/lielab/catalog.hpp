#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "lielab/algebra.hpp"
#include "lielab/gcm.hpp"

namespace lielab {

struct CatalogEntry {
  std::string name;
  std::optional<LieAlgebra> algebra;  // empty for entries flagged structure:absent
  nlohmann::ordered_json expected = nlohmann::ordered_json::object();
  std::string note;
  std::string table2_key;  // row of the GCM table, if the algebra has one
};

// Stored names plus heisenberg_1..heisenberg_4; get() also accepts heisenberg_N for any N >= 1.
std::vector<std::string> catalog_names();
CatalogEntry catalog_get(const std::string& name);
// The algebra of an entry; throws UnknownName for unknown or structure-absent entries.
LieAlgebra catalog_algebra(const std::string& name);

// [x_i, x_{N+i}] = x_{2N+1}
LieAlgebra heisenberg(int n);
// Basis E_ij (i<j), E_ij (i>j), E_kk - E_{k+1,k+1}; gl(n) appends the identity.
LieAlgebra sl_n(int n);
LieAlgebra gl_n(int n);
// Free 2-step nilpotent on k generators: [x_i, x_j] = x_{k + pair index}.
LieAlgebra free_two_step(int k);

struct Table1Row {
  std::string label;
  std::string entry;
  int inv_dim = 0;
  bool quadratic = false;
  std::vector<std::tuple<int, int, Rational>> form;
  std::vector<std::pair<std::vector<int>, Rational>> i_b;
  std::vector<std::pair<std::vector<int>, Rational>> primitive;
};
std::vector<Table1Row> table1_rows();

struct Table2Row {
  std::string key;
  std::string label;
  IntMatrix gcm;
  std::string column;
  std::string type_label;
};
std::vector<Table2Row> table2_rows();

struct ExpectedCheck {
  std::string entry;
  std::string key;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::vector<ExpectedCheck> checks;
  std::vector<std::string> absent;  // entries with no structure constants
  bool ok() const;
};

VerifyReport verify_entry(const CatalogEntry& e);
// Every stored entry, in parallel; checks come back in catalog order.
VerifyReport verify_all();

struct Table1Result {
  std::string label;
  std::string entry;
  bool structure = false;  // false: only the stored data exists, nothing to recompute
  std::size_t inv_dim = 0;
  bool inv_dim_ok = false, identity_ok = false, primitive_ok = false, quadratic_ok = false;
  bool ok() const { return !structure || (inv_dim_ok && identity_ok && primitive_ok && quadratic_ok); }
};
Table1Result check_table1_row(const Table1Row& row);

struct Table2Result {
  Table2Row row;
  std::optional<GcmVerdict> verdict;
  std::string error;  // NotAGCM message when the stored matrix is invalid
  bool ok() const;
};
Table2Result check_table2_row(const Table2Row& row);

nlohmann::ordered_json to_json(const VerifyReport& r);

}  // namespace lielab

#ifndef DKP_IO_HPP
#define DKP_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dkp::io {

/// Floats are printed with 12 significant digits everywhere so emitted tables
/// are bit-stable across runs.
std::string fmt_double(double v);

enum class ColType { Float, Int, Str };

struct Column {
    std::string name;
    ColType type;
};

struct Schema {
    std::string name;
    std::vector<Column> cols;
    /// Indices of columns forming the expected (non-decreasing) sort key.
    std::vector<int> sort_keys;
};

const Schema& spectrum_schema();      ///< axis_value,l,nr,E,branch,admissible,residual
const Schema& state_schema();         ///< r,phi,re/im of Phi1..Phi3,J0
const Schema& state_check_schema();   ///< l,nr,E,res2,res17,res18,res19,charge,norm
const Schema& lieb_band_schema();     ///< k1,k2,E1,E2,E3
const Schema& polarization_schema();  ///< ptilde2_over_m2,pi_even,pi_odd
const Schema& algebra_schema();       ///< rep,triples_checked,max_deviation,exact_zero,failing_triples

struct Cell {
    ColType type = ColType::Float;
    double num = 0.0;
    long long inum = 0;
    std::string str;

    static Cell of(double v) { return {ColType::Float, v, 0, {}}; }
    static Cell of(long long v) { return {ColType::Int, 0.0, v, {}}; }
    static Cell of(int v) { return of(static_cast<long long>(v)); }
    static Cell of(std::string v) { return {ColType::Str, 0.0, 0, std::move(v)}; }
};

using Row = std::vector<Cell>;

void write_csv(std::ostream& os, const Schema& schema, const std::vector<Row>& rows);

struct ValidationResult {
    bool ok = true;
    std::string message;
    int rows = 0;
};

/// Re-parses an emitted table: header, column count, cell types, sort order.
ValidationResult validate_csv(const Schema& schema, std::istream& is);

} // namespace dkp::io

#endif

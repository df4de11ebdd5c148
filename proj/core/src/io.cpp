#include "dkp/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dkp::io {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

Schema make(std::string name, std::vector<Column> cols, std::vector<int> keys) {
    return Schema{std::move(name), std::move(cols), std::move(keys)};
}

} // namespace

const Schema& spectrum_schema() {
    static const Schema s = make("spectrum",
                                 {{"axis_value", ColType::Float},
                                  {"l", ColType::Int},
                                  {"nr", ColType::Int},
                                  {"E", ColType::Float},
                                  {"branch", ColType::Str},
                                  {"admissible", ColType::Int},
                                  {"residual", ColType::Float}},
                                 {0, 1, 2, 3});
    return s;
}

const Schema& state_schema() {
    static const Schema s = make("state",
                                 {{"r", ColType::Float},
                                  {"phi", ColType::Float},
                                  {"re_phi1", ColType::Float},
                                  {"im_phi1", ColType::Float},
                                  {"re_phi2", ColType::Float},
                                  {"im_phi2", ColType::Float},
                                  {"re_phi3", ColType::Float},
                                  {"im_phi3", ColType::Float},
                                  {"J0", ColType::Float}},
                                 {0, 1});
    return s;
}

const Schema& state_check_schema() {
    static const Schema s = make("state_check",
                                 {{"l", ColType::Int},
                                  {"nr", ColType::Int},
                                  {"E", ColType::Float},
                                  {"res2", ColType::Float},
                                  {"res17", ColType::Float},
                                  {"res18", ColType::Float},
                                  {"res19", ColType::Float},
                                  {"charge", ColType::Float},
                                  {"norm", ColType::Float}},
                                 {0, 1, 2});
    return s;
}

const Schema& lieb_band_schema() {
    static const Schema s = make("lieb_bands",
                                 {{"k1", ColType::Float},
                                  {"k2", ColType::Float},
                                  {"E1", ColType::Float},
                                  {"E2", ColType::Float},
                                  {"E3", ColType::Float}},
                                 {0, 1});
    return s;
}

const Schema& polarization_schema() {
    static const Schema s = make("polarization",
                                 {{"ptilde2_over_m2", ColType::Float},
                                  {"pi_even", ColType::Float},
                                  {"pi_odd", ColType::Float}},
                                 {0});
    return s;
}

const Schema& algebra_schema() {
    static const Schema s = make("algebra",
                                 {{"rep", ColType::Int},
                                  {"triples_checked", ColType::Int},
                                  {"max_deviation", ColType::Float},
                                  {"exact_zero", ColType::Int},
                                  {"failing_triples", ColType::Int}},
                                 {0});
    return s;
}

void write_csv(std::ostream& os, const Schema& schema, const std::vector<Row>& rows) {
    for (std::size_t j = 0; j < schema.cols.size(); ++j) {
        if (j) os << ',';
        os << schema.cols[j].name;
    }
    os << '\n';
    for (const Row& row : rows) {
        if (row.size() != schema.cols.size())
            throw std::logic_error("row width does not match schema " + schema.name);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << ',';
            switch (row[j].type) {
                case ColType::Float: os << fmt_double(row[j].num); break;
                case ColType::Int: os << row[j].inum; break;
                case ColType::Str: os << row[j].str; break;
            }
        }
        os << '\n';
    }
}

ValidationResult validate_csv(const Schema& schema, std::istream& is) {
    ValidationResult res;
    std::string line;
    if (!std::getline(is, line)) return {false, "missing header", 0};

    {
        std::ostringstream expect;
        for (std::size_t j = 0; j < schema.cols.size(); ++j) {
            if (j) expect << ',';
            expect << schema.cols[j].name;
        }
        if (line != expect.str()) return {false, "header mismatch: got '" + line + "'", 0};
    }

    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::string cur;
        for (char c : s) {
            if (c == ',') {
                out.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        out.push_back(cur);
        return out;
    };

    std::vector<std::vector<Cell>> parsed;
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto fields = split(line);
        if (fields.size() != schema.cols.size())
            return {false, "line " + std::to_string(lineno) + ": wrong column count", res.rows};
        std::vector<Cell> cells(fields.size());
        for (std::size_t j = 0; j < fields.size(); ++j) {
            cells[j].type = schema.cols[j].type;
            try {
                switch (schema.cols[j].type) {
                    case ColType::Float: {
                        std::size_t pos = 0;
                        cells[j].num = std::stod(fields[j], &pos);
                        if (pos != fields[j].size()) throw std::invalid_argument("trailing");
                        break;
                    }
                    case ColType::Int: {
                        std::size_t pos = 0;
                        cells[j].inum = std::stoll(fields[j], &pos);
                        if (pos != fields[j].size()) throw std::invalid_argument("trailing");
                        break;
                    }
                    case ColType::Str:
                        cells[j].str = fields[j];
                        break;
                }
            } catch (const std::exception&) {
                return {false,
                        "line " + std::to_string(lineno) + ": bad " + schema.cols[j].name + " value '" +
                            fields[j] + "'",
                        res.rows};
            }
        }
        parsed.push_back(std::move(cells));
        ++res.rows;
    }

    auto cmp_key = [&](const std::vector<Cell>& a, const std::vector<Cell>& b) {
        for (int k : schema.sort_keys) {
            const Cell& x = a[static_cast<std::size_t>(k)];
            const Cell& y = b[static_cast<std::size_t>(k)];
            double xv = x.type == ColType::Int ? static_cast<double>(x.inum) : x.num;
            double yv = y.type == ColType::Int ? static_cast<double>(y.inum) : y.num;
            if (x.type == ColType::Str) return 0; // strings excluded from sort keys
            if (xv < yv) return -1;
            if (xv > yv) return 1;
        }
        return 0;
    };
    for (std::size_t i = 1; i < parsed.size(); ++i) {
        if (cmp_key(parsed[i - 1], parsed[i]) > 0)
            return {false, "rows " + std::to_string(i) + "/" + std::to_string(i + 1) + " out of order",
                    res.rows};
    }
    return res;
}

} // namespace dkp::io

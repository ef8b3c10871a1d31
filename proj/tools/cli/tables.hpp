#pragma once

#include "cli/parse.hpp"

#include <json.hpp>

#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace sturm::cli {

using Cell = std::variant<Integer, Rational, QI, std::string, bool>;

/// Rows of key cells followed by value cells.
struct Table {
    std::string id;
    std::vector<std::string> columns;
    std::size_t key_columns = 1;
    std::vector<std::vector<Cell>> rows;
};

struct TableOptions {
    std::string id;
    Angle alpha;
    RhoSpec rho;
    Convention convention = Convention::ZeroInB;
    std::string m, n, i, j;  // empty: table default
    unsigned digits = 6;
};

inline std::string render_cell(const Cell& c, unsigned digits) {
    return std::visit(
        [&](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Integer>) return v.str();
            else if constexpr (std::is_same_v<T, Rational>) return to_string(v);
            else if constexpr (std::is_same_v<T, QI>) return v.is_rational() ? to_string(v.rational_part()) : to_decimal(v, digits);
            else if constexpr (std::is_same_v<T, bool>) return v ? "1" : "0";
            else return v;
        },
        c);
}

inline nlohmann::ordered_json cell_json(const Cell& c, unsigned digits) {
    return std::visit(
        [&](const auto& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Integer>) {
                if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
                    return v.template convert_to<long long>();
                return v.str();
            } else if constexpr (std::is_same_v<T, Rational>) {
                if (is_integer(v)) return cell_json(Cell(Integer(boost::multiprecision::numerator(v))), digits);
                return to_string(v);
            } else if constexpr (std::is_same_v<T, QI>) {
                if (v.is_rational()) return cell_json(Cell(v.rational_part()), digits);
                nlohmann::ordered_json o;
                o["a"] = v.a().str();
                o["b"] = v.b().str();
                o["c"] = v.c().str();
                o["d"] = v.d().str();
                o["approx"] = to_decimal(v, digits);
                return o;
            } else {
                return v;
            }
        },
        c);
}

/// Tab-separated with a header row.
inline void write_tsv(std::ostream& os, const Table& t, unsigned digits) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "\t" : "") << t.columns[c];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "\t" : "") << render_cell(row[c], digits);
        os << '\n';
    }
}

/// {"table": id, "alpha": cf, "rows": [{"key": ..., "value": ...}]}; multi-column keys and values become objects.
inline void write_json(std::ostream& os, const Table& t, const Angle& alpha, unsigned digits) {
    nlohmann::ordered_json doc;
    doc["table"] = t.id;
    doc["alpha"] = alpha.cf.str();
    doc["rows"] = nlohmann::ordered_json::array();
    auto part = [&](const std::vector<Cell>& row, std::size_t from, std::size_t to) {
        if (to - from == 1) return cell_json(row[from], digits);
        nlohmann::ordered_json o;
        for (std::size_t c = from; c < to; ++c) o[t.columns[c]] = cell_json(row[c], digits);
        return o;
    };
    for (const auto& row : t.rows) {
        nlohmann::ordered_json r;
        r["key"] = part(row, 0, t.key_columns);
        r["value"] = part(row, t.key_columns, row.size());
        doc["rows"].push_back(std::move(r));
    }
    os << doc.dump(2) << '\n';
}

namespace detail {

inline void require_fibonacci(const TableOptions& o) {
    if (!o.alpha.fibonacci) throw UsageError("table " + o.id + " is defined for the Fibonacci word only (--alpha fib)");
}

inline Integer I(long long v) { return Integer(v); }
inline Integer I(std::size_t v) { return Integer(v); }

}  // namespace detail

inline const std::vector<std::string>& table_ids() {
    static const std::vector<std::string> ids{"km", "kmn", "kmi", "norms", "lp", "fibperiods", "sqrt5dev"};
    return ids;
}

inline Table build_table(const TableOptions& o) {
    using detail::I;
    Table t;
    t.id = o.id;
    const QI& alpha = o.alpha.value;
    if (o.id == "km") {
        t.columns = {"m", "k_m"};
        for (long long m : range_or(o.m, "1..21", 1, "m"))
            t.rows.push_back({I(m), I(k_max(alpha, static_cast<std::size_t>(m)))});
    } else if (o.id == "kmn") {
        t.columns = {"m", "n", "k_mn"};
        t.key_columns = 2;
        const SturmianSpec spec(alpha, o.rho.u, o.rho.v, o.convention);
        for (long long m : range_or(o.m, "3,10", 1, "m"))
            for (long long n : range_or(o.n, "0..20", 0, "n"))
                t.rows.push_back({I(m), I(n), I(k_mn(spec, static_cast<std::size_t>(m), n).k)});
    } else if (o.id == "kmi") {
        t.columns = {"m", "i", "k_m_i"};
        t.key_columns = 2;
        for (long long m : range_or(o.m, "10", 1, "m"))
            for (long long i : range_or(o.i, "0..9", 0, "i")) {
                if (i > m) throw UsageError("--i entries must not exceed m");
                t.rows.push_back({I(m), I(i), I(guaranteed_exponent(alpha, static_cast<std::size_t>(m), static_cast<std::size_t>(i)))});
            }
    } else if (o.id == "norms") {
        t.columns = {"m", "norm", "record"};
        std::optional<QI> best;
        for (long long m : range_or(o.m, "1..18", 1, "m")) {
            QI norm = dist_nearest_int(QI(m) * alpha);
            const bool record = !best || norm < *best;
            if (record) best = norm;
            t.rows.push_back({I(m), std::move(norm), record});
        }
    } else if (o.id == "lp") {
        detail::require_fibonacci(o);
        t.columns = {"j", "F_j", "lp"};
        for (long long j : range_or(o.j, "2..11", 2, "j"))
            t.rows.push_back({I(j), fib(static_cast<std::size_t>(j)), lp_closed(static_cast<std::size_t>(j))});
    } else if (o.id == "sqrt5dev") {
        detail::require_fibonacci(o);
        t.columns = {"j", "k_j", "dev_x100"};
        for (long long j : range_or(o.j, "2..11", 2, "j")) {
            const auto jj = static_cast<std::size_t>(j);
            const Integer F = fib(jj);
            const Rational k(lp_closed(jj), F);
            QI dev = QI::sqrt(5) - QI(k / Rational(F));
            if (dev.sign() < 0) dev = -dev;
            t.rows.push_back({I(j), k, dev * QI(100)});
        }
    } else if (o.id == "fibperiods") {
        detail::require_fibonacci(o);
        t.columns = {"j", "n", "F_n"};
        for (long long j : range_or(o.j, "3..16", 3, "j")) {
            const auto p = min_period_fj_closed(static_cast<std::size_t>(j));
            t.rows.push_back({I(j), I(p.j), p.value});
        }
    } else {
        throw UsageError("unknown table '" + o.id + "'");
    }
    return t;
}

}  // namespace sturm::cli

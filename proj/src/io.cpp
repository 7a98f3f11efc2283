#include "heffter/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace heffter {

namespace {

struct Token {
    std::string text;
    int line;
    int column;
};

bool parse_entry(const std::string& tok, Entry& out) {
    auto first = tok.data();
    auto last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

// Derives m, n from the shape and s, k from the fill counts when uniform;
// non-uniform grids keep s = k = 0, which any later validation rejects.
DesignParams observed_params(const PartiallyFilledArray& g) {
    DesignParams p;
    p.m = g.rows();
    p.n = g.cols();
    int s = g.row_fill(1);
    for (int i = 2; i <= g.rows(); ++i)
        if (g.row_fill(i) != s) s = 0;
    int k = g.col_fill(1);
    for (int j = 2; j <= g.cols(); ++j)
        if (g.col_fill(j) != k) k = 0;
    p.s = s;
    p.k = k;
    return p;
}

ArrayDocument parse_grid(const std::string& text) {
    ArrayDocument doc;
    std::vector<std::vector<Token>> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        auto start = trimmed.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (trimmed[start] == '#') {
            std::string body = trimmed.substr(start + 1);
            auto eat = [&](const std::string& key) -> std::optional<std::string> {
                auto pos = body.find(key);
                if (pos == std::string::npos) return std::nullopt;
                std::string rest = body.substr(pos + key.size());
                auto b = rest.find_first_not_of(" \t");
                auto e = rest.find_last_not_of(" \t\r");
                if (b == std::string::npos) return std::string();
                return rest.substr(b, e - b + 1);
            };
            if (auto kindv = eat("kind:")) doc.kind = *kindv;
            else if (auto provv = eat("provenance:")) {
                auto sep = provv->find(" | ");
                if (sep == std::string::npos) {
                    doc.provenance.tag = *provv;
                } else {
                    doc.provenance.tag = provv->substr(0, sep);
                    doc.provenance.detail = provv->substr(sep + 3);
                }
            }
            continue;
        }
        std::vector<Token> toks;
        std::istringstream ls(line);
        std::string tok;
        int col = 0;
        while (ls >> tok) toks.push_back({tok, lineno, ++col});
        rows.push_back(std::move(toks));
    }
    if (rows.empty()) throw ParseError("no grid data", lineno, 1);

    // A first line of 4 or 6 positive integers is a header when the
    // remaining lines form the m x n grid it declares.
    std::optional<DesignParams> header;
    const auto& first = rows.front();
    if (first.size() == 4 || first.size() == 6) {
        DesignParams h;
        int vals[6] = {0, 0, 0, 0, 0, 0};
        bool ok = true;
        for (std::size_t i = 0; i < first.size(); ++i) {
            Entry e = 0;
            if (!parse_entry(first[i].text, e) || e <= 0 || e > 1'000'000) {
                ok = false;
                break;
            }
            vals[i] = static_cast<int>(e);
        }
        if (ok) {
            h.m = vals[0];
            h.n = vals[1];
            h.s = vals[2];
            h.k = vals[3];
            if (first.size() == 6) {
                h.t = vals[4];
                h.lambda = vals[5];
            }
            if (static_cast<int>(rows.size()) - 1 == h.m) {
                bool widths = true;
                for (std::size_t r = 1; r < rows.size(); ++r)
                    if (static_cast<int>(rows[r].size()) != h.n) widths = false;
                if (widths) header = h;
            }
        }
    }

    std::size_t data_start = header ? 1 : 0;
    const int m = static_cast<int>(rows.size() - data_start);
    if (m == 0) throw ParseError("no grid rows", lineno, 1);
    const int n = static_cast<int>(rows[data_start].size());
    PartiallyFilledArray grid(m, n);
    for (int i = 0; i < m; ++i) {
        const auto& toks = rows[data_start + static_cast<std::size_t>(i)];
        if (static_cast<int>(toks.size()) != n)
            throw DimensionMismatchError(
                "row " + std::to_string(i + 1) + " has " +
                std::to_string(toks.size()) + " cells, expected " +
                std::to_string(n));
        for (int j = 0; j < n; ++j) {
            const Token& t = toks[static_cast<std::size_t>(j)];
            if (t.text == ".") continue;
            Entry e = 0;
            if (!parse_entry(t.text, e))
                throw ParseError("bad token '" + t.text + "'", t.line,
                                 t.column);
            grid.set(i + 1, j + 1, e);
        }
    }
    doc.grid = grid;
    doc.params = header ? *header : observed_params(grid);
    return doc;
}

ArrayDocument parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), 1, static_cast<int>(e.byte));
    }
    try {
        ArrayDocument doc;
        doc.kind = j.value("kind", "raw");
        const auto& jp = j.at("params");
        doc.params.m = jp.at("m").get<int>();
        doc.params.n = jp.at("n").get<int>();
        doc.params.s = jp.at("s").get<int>();
        doc.params.k = jp.at("k").get<int>();
        if (jp.contains("t")) doc.params.t = jp.at("t").get<int>();
        if (jp.contains("lambda"))
            doc.params.lambda = jp.at("lambda").get<int>();
        const auto& rows = j.at("grid");
        if (!rows.is_array() || rows.empty())
            throw ParseError("grid must be a non-empty array", 1, 1);
        std::vector<std::vector<Cell>> cells;
        for (const auto& row : rows) {
            std::vector<Cell> r;
            for (const auto& v : row) {
                if (v.is_null())
                    r.push_back(std::nullopt);
                else if (v.is_number_integer())
                    r.push_back(v.get<Entry>());
                else
                    throw ParseError("grid entries must be integers or null",
                                     1, 1);
            }
            cells.push_back(std::move(r));
        }
        doc.grid = PartiallyFilledArray::from_rows(cells);
        if (doc.grid.rows() != doc.params.m || doc.grid.cols() != doc.params.n)
            throw DimensionMismatchError("params do not match grid shape");
        if (j.contains("provenance")) {
            doc.provenance.tag = j["provenance"].value("tag", "");
            doc.provenance.detail = j["provenance"].value("detail", "");
        }
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

std::string emit_grid(const ArrayDocument& doc) {
    std::ostringstream os;
    if (doc.kind != "raw") os << "# kind: " << doc.kind << "\n";
    if (!doc.provenance.tag.empty())
        os << "# provenance: " << doc.provenance.tag
           << (doc.provenance.detail.empty() ? "" : " | " + doc.provenance.detail)
           << "\n";
    // A header is only meaningful for uniform fill counts; grids with
    // s = 0 or k = 0 round-trip headerless.
    if (doc.params.s > 0 && doc.params.k > 0) {
        os << doc.params.m << " " << doc.params.n << " " << doc.params.s << " "
           << doc.params.k;
        if (doc.params.t || doc.params.lambda)
            os << " " << doc.params.t.value_or(1) << " "
               << doc.params.lambda.value_or(1);
        os << "\n";
    }
    std::size_t width = 1;
    for (int i = 1; i <= doc.grid.rows(); ++i)
        for (int j = 1; j <= doc.grid.cols(); ++j)
            if (doc.grid.filled(i, j))
                width = std::max(
                    width, std::to_string(doc.grid.value(i, j)).size());
    for (int i = 1; i <= doc.grid.rows(); ++i) {
        for (int j = 1; j <= doc.grid.cols(); ++j) {
            std::string cell = doc.grid.filled(i, j)
                                   ? std::to_string(doc.grid.value(i, j))
                                   : ".";
            os << (j > 1 ? " " : "") << std::string(width - cell.size(), ' ')
               << cell;
        }
        os << "\n";
    }
    return os.str();
}

std::string emit_json(const ArrayDocument& doc) {
    nlohmann::ordered_json j;
    j["kind"] = doc.kind;
    nlohmann::ordered_json jp;
    jp["m"] = doc.params.m;
    jp["n"] = doc.params.n;
    jp["s"] = doc.params.s;
    jp["k"] = doc.params.k;
    if (doc.params.t) jp["t"] = *doc.params.t;
    if (doc.params.lambda) jp["lambda"] = *doc.params.lambda;
    j["params"] = jp;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 1; i <= doc.grid.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int jx = 1; jx <= doc.grid.cols(); ++jx) {
            if (doc.grid.filled(i, jx))
                row.push_back(doc.grid.value(i, jx));
            else
                row.push_back(nullptr);
        }
        rows.push_back(row);
    }
    j["grid"] = rows;
    j["provenance"] = {{"tag", doc.provenance.tag},
                       {"detail", doc.provenance.detail}};
    return j.dump() + "\n";
}

}  // namespace

ArrayDocument ArrayDocument::wrap(std::string kind, PartiallyFilledArray grid,
                                  DesignParams params, Provenance prov) {
    ArrayDocument doc;
    doc.kind = std::move(kind);
    doc.grid = std::move(grid);
    doc.params = params;
    doc.provenance = std::move(prov);
    return doc;
}

ArrayDocument parse_array(const std::string& text, ArrayFormat format) {
    return format == ArrayFormat::Grid ? parse_grid(text) : parse_json(text);
}

std::string emit_array(const ArrayDocument& doc, ArrayFormat format) {
    return format == ArrayFormat::Grid ? emit_grid(doc) : emit_json(doc);
}

std::string render_grid(const PartiallyFilledArray& a) {
    std::size_t width = 1;
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.cols(); ++j)
            if (a.filled(i, j))
                width = std::max(width, std::to_string(a.value(i, j)).size());
    std::ostringstream os;
    for (int i = 1; i <= a.rows(); ++i) {
        for (int j = 1; j <= a.cols(); ++j) {
            std::string cell =
                a.filled(i, j) ? std::to_string(a.value(i, j)) : ".";
            os << (j > 1 ? " " : "") << std::string(width - cell.size(), ' ')
               << cell;
        }
        os << "\n";
    }
    return os.str();
}

ArrayDocument load_array_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const bool json = path.size() > 5 &&
                      path.compare(path.size() - 5, 5, ".json") == 0;
    return parse_array(buf.str(), json ? ArrayFormat::Json : ArrayFormat::Grid);
}

}  // namespace heffter

#include "picard/cells.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace picard {

namespace detail {
extern const char* const kShippedCellsJson;
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("cell dataset: " + what); }

Word parse_word(const json& j, const std::string& where) {
    if (!j.is_string()) bad(where + ": word must be a string");
    try {
        return Word::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        bad(where + ": " + e.what());
    }
}

}  // namespace

CellDataset CellDataset::from_json(const json& j) {
    if (!j.is_object()) bad("top level must be an object");
    if (j.value("schema", "") != kSchema) bad("schema must be \"" + std::string(kSchema) + "\"");
    if (j.value("version", 0) != kVersion) bad("unsupported version");
    if (!j.contains("cells") || !j["cells"].is_array()) bad("missing cells array");
    CellDataset d;
    d.description = j.value("description", "");
    for (const auto& c : j["cells"]) {
        CellDatum cd;
        if (!c.contains("name") || !c["name"].is_string()) bad("cell without a name");
        cd.name = c["name"].get<std::string>();
        if (!c.contains("dim") || !c["dim"].is_number_integer()) bad(cd.name + ": missing dim");
        cd.dim = c["dim"].get<int>();
        if (cd.dim < 0 || cd.dim > 3) bad(cd.name + ": dim out of range");
        if (d.where_.count(cd.name)) bad("duplicate cell " + cd.name);
        cd.order = c.value("order", std::size_t{1});
        for (const auto& w : c.value("stabilizer", json::array())) cd.stabilizer.push_back(parse_word(w, cd.name));
        const json bd = c.value("boundary", json::array());
        if (cd.dim == 0 && !bd.empty()) bad(cd.name + ": vertices have no boundary");
        if (cd.dim > 0 && bd.empty()) bad(cd.name + ": empty boundary");
        for (const auto& r : bd) {
            BoundaryRecord br;
            if (!r.contains("face") || !r["face"].is_string()) bad(cd.name + ": boundary record without face");
            br.face = r["face"].get<std::string>();
            auto it = d.where_.find(br.face);
            if (it == d.where_.end()) bad(cd.name + ": face " + br.face + " must be listed earlier");
            if (it->second.first != cd.dim - 1) bad(cd.name + ": face " + br.face + " has the wrong dimension");
            br.sign = r.value("sign", 0);
            if (br.sign != 1 && br.sign != -1) bad(cd.name + ": sign must be +1 or -1");
            br.word = parse_word(r.value("word", json("1")), cd.name);
            cd.boundary.push_back(br);
        }
        d.where_[cd.name] = {cd.dim, d.by_dim_[cd.dim].size()};
        d.by_dim_[cd.dim].push_back(std::move(cd));
    }
    return d;
}

json CellDataset::to_json() const {
    json cells = json::array();
    for (const auto& level : by_dim_)
        for (const auto& c : level) {
            json jc{{"name", c.name}, {"dim", c.dim}, {"order", c.order}};
            json st = json::array();
            for (const auto& w : c.stabilizer) st.push_back(w.str());
            jc["stabilizer"] = st;
            if (c.dim > 0) {
                json bd = json::array();
                for (const auto& r : c.boundary) bd.push_back({{"face", r.face}, {"sign", r.sign}, {"word", r.word.str()}});
                jc["boundary"] = bd;
            }
            cells.push_back(jc);
        }
    return {{"schema", kSchema}, {"version", kVersion}, {"description", description}, {"cells", cells}};
}

const CellDatum& CellDataset::cell(const std::string& name) const {
    auto it = where_.find(name);
    if (it == where_.end()) throw std::out_of_range("no cell named " + name);
    return by_dim_[it->second.first][it->second.second];
}

std::size_t CellDataset::index(const std::string& name) const {
    auto it = where_.find(name);
    if (it == where_.end()) throw std::out_of_range("no cell named " + name);
    return it->second.second;
}

const char* shipped_cells_text() { return detail::kShippedCellsJson; }

const CellDataset& shipped_cells() {
    static const CellDataset d = CellDataset::from_json(json::parse(detail::kShippedCellsJson));
    return d;
}

std::vector<DifferentialTerm> differential_terms(const CellDataset& cells, int p) {
    if (p < 0 || p > 2) throw std::invalid_argument("differential degree must be 0, 1 or 2");
    std::vector<DifferentialTerm> out;
    const auto& targets = cells.cells(p + 1);
    for (std::size_t r = 0; r < targets.size(); ++r)
        for (const auto& b : targets[r].boundary) out.push_back({r, cells.index(b.face), b.sign, b.word});
    return out;
}

std::vector<DifferentialTerm> display_terms(int p) {
    auto W = [](const char* s) { return Word::parse(s); };
    switch (p) {
    case 0:
        return {{0, 0, -1, W("1")}, {0, 2, 1, W("x^2")},
                {1, 2, 1, W("x")},  {1, 4, -1, W("1")},
                {2, 2, 1, W("1")},  {2, 4, -1, W("1")},
                {3, 2, -1, W("1")}, {3, 2, 1, W("x")},
                {4, 2, 1, W("1")},  {4, 3, -1, W("1")},
                {5, 1, -1, W("1")}, {5, 3, 1, W("1")},
                {6, 0, 1, W("1")},  {6, 1, -1, W("1")},
                {7, 3, 1, W("1")},  {7, 5, -1, W("1")},
                {8, 2, 1, W("1")},  {8, 5, -1, W("1")}};
    case 1:
        return {{0, 0, -1, W("1")}, {0, 0, 1, W("t e w")}, {0, 3, 1, W("x")},
                {1, 1, 1, W("1")},  {1, 2, -1, W("1")},    {1, 3, -1, W("1")},
                {2, 3, 1, W("1")},  {2, 3, 1, W("x")},     {2, 4, 1, W("1")},  {2, 4, -1, W("x^2")},
                {3, 1, -1, W("s e^2")}, {3, 2, 1, W("1")}, {3, 4, -1, W("1")}, {3, 4, 1, W("t s w t s^-1")},
                {3, 5, -1, W("1")}, {3, 5, 1, W("e")},
                {4, 0, 1, W("1")},  {4, 4, -1, W("x^2")},  {4, 5, -1, W("1")}, {4, 6, 1, W("1")},
                {5, 4, -1, W("1")}, {5, 7, -1, W("1")},    {5, 8, 1, W("1")},
                {6, 3, 1, W("1")},  {6, 8, 1, W("1")},     {6, 8, -1, W("x")}};
    case 2:
        // A = I + rho(tew) + rho(tew)^2, B = -I + rho(s e w s^-1) - rho(s e w s^-1 e w)
        return {{0, 0, 1, W("1")},  {0, 0, 1, W("t e w")}, {0, 0, 1, W("t e w t e w")},
                {0, 1, -1, W("1")}, {0, 1, 1, W("s e w s^-1")}, {0, 1, -1, W("s e w s^-1 e w")},
                {0, 2, -1, W("1")}, {0, 2, -1, W("t s e w^-1")},
                {0, 3, -1, W("1")}, {0, 4, 1, W("1")},     {0, 4, -1, W("e")},
                {1, 2, -1, W("1")}, {1, 5, -1, W("1")},    {1, 5, 1, W("x^2")},
                {1, 6, 1, W("1")},  {1, 6, 1, W("x")}};
    default: throw std::invalid_argument("differential degree must be 0, 1 or 2");
    }
}

bool same_terms(const std::vector<DifferentialTerm>& a, const std::vector<DifferentialTerm>& b) {
    using Key = std::tuple<std::size_t, std::size_t, int, GMat3>;
    auto keys = [](const std::vector<DifferentialTerm>& t) {
        std::vector<Key> k;
        for (const auto& x : t) k.emplace_back(x.row, x.col, x.sign, eval_word(x.word));
        std::sort(k.begin(), k.end());
        return k;
    };
    return keys(a) == keys(b);
}

}  // namespace picard

#include "swinglat/json_io.hpp"

namespace swinglat {

namespace {

void require(bool condition, const char* what) {
    if (!condition) throw ArgumentError(std::string("malformed JSON: ") + what);
}

} // namespace

Json diagram_to_json(const Diagram& d) {
    Json upper = Json::array();
    for (ElementId x = 0; x < d.size(); ++x) {
        const auto ups = d.upper_covers(x);
        upper.push_back(std::vector<ElementId>(ups.begin(), ups.end()));
    }
    Json layout = nullptr;
    if (d.layout()) {
        layout = Json::array();
        for (const Point& p : *d.layout()) layout.push_back({p.x, p.y});
    }
    return Json{{"size", d.size()}, {"upper_covers", upper}, {"layout", layout}};
}

Diagram diagram_from_json(const Json& j) {
    require(j.is_object(), "diagram must be an object");
    require(j.contains("size") && j["size"].is_number_integer(), "size");
    require(j.contains("upper_covers") && j["upper_covers"].is_array(), "upper_covers");
    const int n = j["size"].get<int>();
    require(n >= 0 && static_cast<int>(j["upper_covers"].size()) == n, "upper_covers length differs from size");
    CoverData data;
    for (const auto& row : j["upper_covers"]) {
        require(row.is_array(), "upper_covers rows must be arrays");
        std::vector<ElementId> ups;
        for (const auto& id : row) {
            require(id.is_number_integer(), "ids must be integers");
            ups.push_back(id.get<ElementId>());
        }
        data.upper_covers.push_back(std::move(ups));
    }
    if (j.contains("layout") && !j["layout"].is_null()) {
        require(j["layout"].is_array(), "layout");
        std::vector<Point> pts;
        for (const auto& p : j["layout"]) {
            require(p.is_array() && p.size() == 2 && p[0].is_number() && p[1].is_number(), "layout point");
            pts.push_back({p[0].get<double>(), p[1].get<double>()});
        }
        data.layout = std::move(pts);
    }
    return Diagram::from_cover_data(data);
}

Json edge_to_json(PrimeInterval e) { return Json::array({e.lower, e.upper}); }

PrimeInterval edge_from_json(const Json& j) {
    require(j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer(),
            "edge must be [lower, upper]");
    return {j[0].get<ElementId>(), j[1].get<ElementId>()};
}

Json cell_to_json(const FourCell& c) { return Json::array({c.bottom, c.left_mid, c.right_mid, c.top}); }

FourCell cell_from_json(const Json& j) {
    require(j.is_array() && j.size() == 4, "cell must be [o, a, b, t]");
    for (const auto& id : j) require(id.is_number_integer(), "cell ids must be integers");
    return {j[0].get<ElementId>(), j[1].get<ElementId>(), j[2].get<ElementId>(), j[3].get<ElementId>()};
}

Json partition_to_json(const Partition& p) { return Json{{"blocks", p.blocks()}}; }

Partition partition_from_json(int size, const Json& j) {
    require(j.is_object() && j.contains("blocks") && j["blocks"].is_array(), "partition needs blocks");
    return Partition::from_blocks(size, j["blocks"].get<std::vector<std::vector<ElementId>>>());
}

Json recipe_to_json(const BuildRecipe& r) {
    Json forks = Json::array();
    for (const auto& c : r.forks) forks.push_back(cell_to_json(c));
    Json eye_cells = Json::array();
    for (const auto& c : r.eyes) eye_cells.push_back(cell_to_json(c));
    return Json{{"grid", {r.grid_m, r.grid_n}},
                {"forks", forks},
                {"corners", r.corners},
                {"eyes", eye_cells},
                {"seed", r.seed}};
}

BuildRecipe recipe_from_json(const Json& j) {
    require(j.is_object() && j.contains("grid") && j["grid"].is_array() && j["grid"].size() == 2, "recipe grid");
    BuildRecipe r;
    r.grid_m = j["grid"][0].get<int>();
    r.grid_n = j["grid"][1].get<int>();
    for (const auto& c : j.value("forks", Json::array())) r.forks.push_back(cell_from_json(c));
    r.corners = j.value("corners", std::vector<ElementId>{});
    for (const auto& c : j.value("eyes", Json::array())) r.eyes.push_back(cell_from_json(c));
    r.seed = j.value("seed", std::uint64_t{0});
    return r;
}

Json sequence_to_json(const StepSequence& s) {
    Json edges = Json::array();
    for (const auto& e : s.edges) edges.push_back(edge_to_json(e));
    Json steps = Json::array();
    for (const auto& st : s.steps)
        steps.push_back({{"kind", to_string(st.kind)}, {"cell", cell_to_json(st.cell)}});
    return Json{{"edges", edges}, {"steps", steps}};
}

} // namespace swinglat

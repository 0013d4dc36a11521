#include "lievar/catalog.hpp"

namespace lievar {

namespace {

Binding bind(std::initializer_list<std::pair<const char*, const char*>> kv) {
    Binding b;
    for (const auto& [k, v] : kv) b[k] = v;
    return b;
}

std::vector<AlgebraSet> make_sets() {
    std::vector<AlgebraSet> sets;

    {
        AlgebraSet s;
        s.name = "dim7-class56";
        s.description = "indecomposable seven-dimensional nilpotent algebras of class 5 and 6";
        s.rows = {
            {"gI", {}, "gI(a) generic"},
            {"gI", bind({{"a", "-2"}}), "gI(-2)"},
            {"gI", bind({{"a", "1-w"}}), "gI(1-w)"},
            {"gF", {}, "gF"},
            {"gH", {}, "gH"},
            {"g3", {}, "g3"},
            {"g4", {}, "g4"},
            {"g6", {}, "g6"},
            {"g7", {}, "g7"},
            {"gC", {}, "gC"},
            {"gG", {}, "gG"},
            {"gE", {}, "gE"},
            {"g8", {}, "g8"},
            {"g9", {}, "g9"},
            {"g10", {}, "g10"},
            {"g11", {}, "g11"},
            {"g12", {}, "g12"},
            {"g13", {}, "g13"},
            {"g14", {}, "g14"},
            {"g15", {}, "g15"},
            {"g16", {}, "g16"},
            {"gD", {}, "gD"},
            {"gB", {}, "gB"},
            {"g19", {}, "g19"},
            {"g20", {}, "g20"},
            {"g21", {}, "g21"},
            {"g22", {}, "g22"},
            {"g23", {}, "g23"},
            {"g24", {}, "g24"},
            {"g25", {}, "g25"},
            {"g27", {}, "g27"},
            {"gA", {}, "gA"},
            {"g28", {}, "g28"},
            {"g29", {}, "g29"},
            {"g30", {}, "g30"},
            {"g31", {}, "g31"},
        };
        sets.push_back(std::move(s));
    }
    {
        AlgebraSet s;
        s.name = "dim7-excluded";
        s.description = "catalogued algebras outside the degeneration study";
        s.rows = {
            {"g1", {}, "g1(l) generic"}, {"g2", {}, "g2"},   {"g5", {}, "g5"},
            {"g17", {}, "g17"},          {"g18", {}, "g18"}, {"g26", {}, "g26"},
        };
        sets.push_back(std::move(s));
    }
    {
        AlgebraSet s;
        s.name = "N5";
        s.description = "five-dimensional nilpotent orbits";
        s.rows = {
            {"g5_6", {}, "g5_6"},   {"g5_5", {}, "g5_5"},   {"g5_4", {}, "g5_4"},
            {"g5_3", {}, "g5_3"},   {"g5_2", {}, "g5_2"},   {"g5_1", {}, "g5_1"},
            {"n4_c1", {}, "n4+C"},  {"n3_c2", {}, "n3+C^2"}, {"c5", {}, "C^5"},
        };
        sets.push_back(std::move(s));
    }
    {
        AlgebraSet s;
        s.name = "N6-filiform";
        s.description = "six-dimensional filiform algebras";
        s.rows = {
            {"g6E", {}, "g6E"}, {"g6C", {}, "g6C"}, {"g6D", {}, "g6D"},
            {"g6B", {}, "g6B"}, {"g6A", {}, "g6A"},
        };
        sets.push_back(std::move(s));
    }
    {
        AlgebraSet s;
        s.name = "N4";
        s.description = "four-dimensional nilpotent orbits";
        s.rows = {{"n4", {}, "n4"}, {"n3_c1", {}, "n3+C"}, {"c4", {}, "C^4"}};
        sets.push_back(std::move(s));
    }
    {
        AlgebraSet s;
        s.name = "N3";
        s.description = "three-dimensional nilpotent orbits";
        s.rows = {{"n3", {}, "n3"}, {"c3", {}, "C^3"}};
        sets.push_back(std::move(s));
    }
    {
        AlgebraSet s;
        s.name = "L3";
        s.description = "three-dimensional orbits";
        s.rows = {
            {"sl2", {}, "sl2"},
            {"r3", {}, "r3"},
            {"r3a", {}, "r3a(a) generic"},
            {"r3_m1", {}, "r3(-1)"},
            {"r3_1", {}, "r3(1)"},
            {"r2_c1", {}, "r2+C"},
            {"n3", {}, "n3"},
            {"c3", {}, "C^3"},
        };
        sets.push_back(std::move(s));
    }
    {
        AlgebraSet s;
        s.name = "L3-essential";
        s.description = "instances generating the three-dimensional degeneration order";
        s.rows = {
            {"sl2", {}, "sl2"},
            {"r3", {}, "r3"},
            {"r3a", bind({{"a", "1/2"}}), "r3(1/2)"},
            {"r3_m1", {}, "r3(-1)"},
            {"r3_1", {}, "r3(1)"},
            {"r2_c1", {}, "r2+C"},
            {"n3", {}, "n3"},
            {"c3", {}, "C^3"},
        };
        sets.push_back(std::move(s));
    }
    {
        AlgebraSet s;
        s.name = "L4";
        s.description = "four-dimensional orbit representatives with decomposables";
        s.rows = {
            {"sl2_c1", {}, "sl2+C"},
            {"r2_r2", {}, "r2+r2"},
            {"l4g5", {}, "g5(a) generic"},
            {"l4g4", {}, "g4(a,b) generic"},
            {"l4g3", {}, "g3"},
            {"l4g2", {}, "g2(a) generic"},
            {"l4g1", {}, "g1"},
            {"r3a_c1", {}, "r3a+C generic"},
            {"r31_c1", {}, "r31+C"},
            {"r3_c1", {}, "r3+C"},
            {"r2_c2", {}, "r2+C^2"},
            {"n4", {}, "n4"},
            {"n3_c1", {}, "n3+C"},
            {"c4", {}, "C^4"},
        };
        sets.push_back(std::move(s));
    }
    {
        AlgebraSet s;
        s.name = "L4-essential";
        s.description = "instances generating the four-dimensional degeneration order";
        s.rows = {
            {"sl2_c1", {}, "sl2+C"},
            {"r2_r2", {}, "r2+r2"},
            {"l4g5", bind({{"a", "2"}}), "g5(2)"},
            {"l4g5", bind({{"a", "1"}}), "g5(1)"},
            {"l4g5", bind({{"a", "-1"}}), "g5(-1)"},
            {"l4g5", bind({{"a", "0"}}), "g5(0)"},
            {"l4g4", bind({{"a", "3"}, {"b", "5"}}), "g4(3,5)"},
            {"l4g4", bind({{"a", "3"}, {"b", "1"}}), "g4(3,1)"},
            {"l4g4", bind({{"a", "2"}, {"b", "3"}}), "g4(2,3)"},
            {"l4g4", bind({{"a", "3"}, {"b", "0"}}), "g4(3,0)"},
            {"l4g4", bind({{"a", "0"}, {"b", "0"}}), "g4(0,0)"},
            {"l4g3", {}, "g3"},
            {"l4g2", bind({{"a", "3"}}), "g2(3)"},
            {"l4g2", bind({{"a", "2"}}), "g2(2)"},
            {"l4g2", bind({{"a", "1"}}), "g2(1)"},
            {"l4g1", {}, "g1"},
            {"r2_c2", {}, "r2+C^2"},
            {"n4", {}, "n4"},
            {"n3_c1", {}, "n3+C"},
            {"c4", {}, "C^4"},
        };
        sets.push_back(std::move(s));
    }
    return sets;
}

} // namespace

const std::vector<AlgebraSet>& builtin_sets() {
    static const std::vector<AlgebraSet> sets = make_sets();
    return sets;
}

const AlgebraSet& find_set(const std::string& name) {
    for (const auto& s : builtin_sets())
        if (s.name == name) return s;
    throw unknown_label_error("unknown algebra set: " + name);
}

} // namespace lievar

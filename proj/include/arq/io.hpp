#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "arq/arquiver.hpp"
#include "arq/denom.hpp"
#include "arq/orders.hpp"
#include "arq/rootsys.hpp"
#include "arq/words.hpp"

namespace arq {

using nlohmann::json;

json root_to_json(const RootSystem& sys, RootId r);
RootId root_from_json(const RootSystem& sys, const json& j);

json system_to_json(const RootSystem& sys);
SystemPtr system_from_json(const json& j);

json heap_to_json(const CommClass& c);
CommClass heap_from_json(const SystemPtr& sys, const json& j);

json ar_to_json(const ARQuiver& g);
ARQuiver ar_from_json(const SystemPtr& sys, const json& j);

json sequence_to_json(const CommClass& c, const RootSequence& m);
RootSequence sequence_from_json(const RootSystem& sys, const json& j);

json polynomial_to_json(int k, int l, const DistancePolynomial& d, bool correction);
DistancePolynomial polynomial_from_json(const json& j);

std::string ar_to_dot(const ARQuiver& g);
std::string ar_to_text(const ARQuiver& g);

// golden data shipped in the fixtures directory ($ARQ_FIXTURE_DIR overrides)
std::string fixture_dir();

struct GridFixture {
    std::string system;   // e.g. "E6"
    std::string quiver;   // orientation, "1>2,..."
    struct Cell {
        int residue;  // 1-based
        int column;
        std::string root;
    };
    std::vector<Cell> cells;
};

struct ReadingsFixture {
    std::string system;
    std::string quiver;
    std::vector<std::vector<std::string>> readings;
};

struct TableFixture {
    struct Row {
        std::vector<std::pair<int, int>> entries;  // 1-based (k, l)
        std::string text;
    };
    std::vector<Row> rows;
};

GridFixture load_grid(const std::string& name);
ReadingsFixture load_readings(const std::string& name);
TableFixture load_table(const std::string& name);

// one line per disagreement; empty when the labels match up to a shift of coordinates
std::vector<std::string> diff_grid(const GridFixture& f, const ARQuiver& g);

}  // namespace arq

#include "hloc/io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace hloc {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("tensor file: " + msg); }

}  // namespace

Tensor parse_tensor(const std::string& json_text, std::size_t guard) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("top level must be an object");
    if (!doc.contains("order") || !doc.contains("dim")) fail("order and dim are required");
    const int order = doc["order"].get<int>();
    const int dim = doc["dim"].get<int>();
    const std::string format = doc.value("format", std::string("dense"));

    if (format == "dense") {
        if (!doc.contains("dense")) fail("dense format requires a 'dense' array");
        std::vector<double> entries = doc["dense"].get<std::vector<double>>();
        return Tensor(order, dim, std::move(entries), guard);
    }
    if (format != "coords") fail("format must be 'dense' or 'coords'");

    if (!doc.contains("entries")) fail("coords format requires an 'entries' array");
    const bool symmetrize = doc.value("symmetrize", false);
    Tensor t = Tensor::zeros(order, dim, guard);
    std::vector<char> assigned(t.data().size(), 0);

    auto assign = [&](std::size_t lin, double val) {
        if (assigned[lin] && t.data()[lin] != val)
            fail("conflicting values for one coordinate (symmetrize never averages)");
        assigned[lin] = 1;
        t.data()[lin] = val;
    };

    for (const json& e : doc["entries"]) {
        if (!e.contains("idx") || !e.contains("val")) fail("entry needs 'idx' and 'val'");
        std::vector<int> idx = e["idx"].get<std::vector<int>>();
        if (static_cast<int>(idx.size()) != order) fail("index tuple arity mismatch");
        for (int& v : idx) {
            if (v < 1 || v > dim) fail("index out of range (indices are 1-based)");
            --v;
        }
        const double val = e["val"].get<double>();
        if (symmetrize) {
            std::sort(idx.begin(), idx.end());
            do {
                assign(t.linear_index(idx), val);
            } while (std::next_permutation(idx.begin(), idx.end()));
        } else {
            assign(t.linear_index(idx), val);
        }
    }
    return t;
}

Tensor load_tensor(const std::string& path, std::size_t guard) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_tensor(text, guard);
}

std::string tensor_to_json(const Tensor& a, bool dense) {
    json doc;
    doc["order"] = a.order();
    doc["dim"] = a.dim();
    if (dense) {
        doc["format"] = "dense";
        doc["dense"] = a.data();
    } else {
        doc["format"] = "coords";
        json entries = json::array();
        std::vector<int> idx(static_cast<std::size_t>(a.order()));
        for (std::size_t lin = 0; lin < a.data().size(); ++lin) {
            if (a.data()[lin] == 0) continue;
            a.unpack_index(lin, idx);
            json e;
            std::vector<int> one_based = idx;
            for (int& v : one_based) ++v;
            e["idx"] = one_based;
            e["val"] = a.data()[lin];
            entries.push_back(std::move(e));
        }
        doc["entries"] = std::move(entries);
    }
    return doc.dump(2) + "\n";
}

void save_tensor(const Tensor& a, const std::string& path, bool dense) {
    std::ofstream out(path);
    if (!out) fail("cannot open " + path + " for writing");
    out << tensor_to_json(a, dense);
}

}  // namespace hloc

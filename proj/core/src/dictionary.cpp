#include "xling/dictionary.hpp"

#include <fstream>
#include <istream>

#include "xling/errors.hpp"
#include "xling/semantic_space.hpp"
#include "xling/sentence.hpp"

namespace xling {

BilingualDictionary BilingualDictionary::load(std::istream& in) {
    BilingualDictionary dict;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
            throw io_error("dictionary line " + std::to_string(line_no) +
                           ": expected \"source<TAB>target\"");
        dict.pairs.emplace_back(to_lower(line.substr(0, tab)), to_lower(line.substr(tab + 1)));
    }
    return dict;
}

BilingualDictionary BilingualDictionary::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open dictionary: " + path);
    try {
        return load(in);
    } catch (const io_error& e) {
        throw io_error(path + ": " + e.what());
    }
}

TrainingMatrices build_training_matrices(const BilingualDictionary& dict,
                                         const SemanticSpace& src, const SemanticSpace& tgt) {
    if (src.dim() != tgt.dim())
        throw numeric_error("training matrices: source dimension " + std::to_string(src.dim()) +
                            " does not match target dimension " + std::to_string(tgt.dim()));

    std::vector<std::pair<Eigen::Index, Eigen::Index>> rows;
    rows.reserve(dict.pairs.size());
    std::size_t dropped = 0;
    for (const auto& [sw, tw] : dict.pairs) {
        const auto si = src.find(sw);
        const auto ti = tgt.find(tw);
        if (si && ti)
            rows.emplace_back(*si, *ti);
        else
            ++dropped;
    }
    if (rows.empty())
        throw numeric_error("training matrices: no dictionary pair survives vocabulary lookup");

    TrainingMatrices out;
    out.dropped = dropped;
    const auto m = static_cast<Eigen::Index>(rows.size());
    out.X.resize(m, src.dim());
    out.Y.resize(m, tgt.dim());
    for (Eigen::Index i = 0; i < m; ++i) {
        out.X.row(i) = src.row(rows[static_cast<std::size_t>(i)].first);
        out.Y.row(i) = tgt.row(rows[static_cast<std::size_t>(i)].second);
    }
    return out;
}

} // namespace xling

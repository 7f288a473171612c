#include "xling/semantic_space.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string_view>
#include <utility>

#include "xling/errors.hpp"
#include "xling/sentence.hpp"

namespace xling {

namespace {

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool parse_double(std::string_view token, double& out) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end;
}

bool parse_size(std::string_view token, std::size_t& out) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

} // namespace

SemanticSpace::SemanticSpace(std::vector<std::string> vocab, Eigen::MatrixXd vectors)
    : vocab_(std::move(vocab)), vectors_(std::move(vectors)) {
    if (static_cast<Eigen::Index>(vocab_.size()) != vectors_.rows())
        throw numeric_error("semantic space: vocabulary size does not match vector rows");
    index_.reserve(vocab_.size());
    for (std::size_t i = 0; i < vocab_.size(); ++i) {
        auto [it, inserted] = index_.emplace(vocab_[i], static_cast<Eigen::Index>(i));
        if (!inserted) throw numeric_error("semantic space: duplicate word '" + vocab_[i] + "'");
    }
}

std::optional<Eigen::Index> SemanticSpace::find(const std::string& word) const {
    auto it = index_.find(word);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

SemanticSpace SemanticSpace::load(std::istream& in, const LoadOptions& opts, LoadStats* stats) {
    std::string line;
    if (!std::getline(in, line)) throw io_error("vector file: missing header line");
    strip_cr(line);

    auto header = split_ws(line);
    std::size_t declared = 0, dim = 0;
    if (header.size() != 2 || !parse_size(header[0], declared) || !parse_size(header[1], dim) ||
        dim == 0)
        throw io_error("vector file line 1: expected header \"<count> <dim>\"");

    std::vector<std::string> vocab;
    std::unordered_map<std::string, Eigen::Index> seen;
    std::vector<double> data;
    std::size_t lines_read = 0, duplicates = 0;

    while (lines_read < declared && std::getline(in, line)) {
        strip_cr(line);
        const std::size_t line_no = lines_read + 2; // header is line 1
        ++lines_read;

        auto fields = split_ws(line);
        if (fields.size() != dim + 1)
            throw io_error("vector file line " + std::to_string(line_no) + ": expected " +
                           std::to_string(dim) + " values after the word, got " +
                           std::to_string(fields.empty() ? 0 : fields.size() - 1));

        std::string word = to_lower(fields[0]);
        if (seen.count(word)) {
            ++duplicates;
            // still validate the numbers so a corrupt line is not silently skipped
            for (std::size_t j = 1; j <= dim; ++j) {
                double v;
                if (!parse_double(fields[j], v))
                    throw io_error("vector file line " + std::to_string(line_no) +
                                   ": cannot parse value '" + std::string(fields[j]) + "'");
            }
            continue;
        }
        if (opts.max_vocab != 0 && vocab.size() >= opts.max_vocab) continue;

        for (std::size_t j = 1; j <= dim; ++j) {
            double v;
            if (!parse_double(fields[j], v))
                throw io_error("vector file line " + std::to_string(line_no) +
                               ": cannot parse value '" + std::string(fields[j]) + "'");
            if (!std::isfinite(v))
                throw io_error("vector file line " + std::to_string(line_no) +
                               ": non-finite value");
            data.push_back(v);
        }
        seen.emplace(word, static_cast<Eigen::Index>(vocab.size()));
        vocab.push_back(std::move(word));
    }

    if (stats) {
        stats->lines_read = lines_read;
        stats->duplicates_dropped = duplicates;
    }

    const auto rows = static_cast<Eigen::Index>(vocab.size());
    Eigen::MatrixXd vectors(rows, static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(dim); ++j)
            vectors(i, j) = data[static_cast<std::size_t>(i) * dim + static_cast<std::size_t>(j)];

    return SemanticSpace(std::move(vocab), std::move(vectors));
}

SemanticSpace SemanticSpace::load_file(const std::string& path, const LoadOptions& opts,
                                       LoadStats* stats) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open vector file: " + path);
    try {
        return load(in, opts, stats);
    } catch (const io_error& e) {
        throw io_error(path + ": " + e.what());
    }
}

SemanticSpace preprocess_space(SemanticSpace space) {
    if (space.preprocessed_)
        throw numeric_error("preprocess_space: space is already preprocessed");
    if (space.size() == 0) throw numeric_error("preprocess_space: empty space");

    Eigen::MatrixXd& m = space.vectors_;
    m.rowwise() -= m.colwise().mean();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const double norm = m.row(i).norm();
        if (norm != 0.0) m.row(i) /= norm;
    }
    space.preprocessed_ = true;
    return space;
}

} // namespace xling

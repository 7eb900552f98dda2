#include "simplicial/space_format.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace simplicial {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(start, end - start));
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] != '#') out.push_back({number, std::move(line)});
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

int parse_count(const std::string& token, int line, const char* what) {
    int value = -1;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
        throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" + token + "'");
    return value;
}

std::vector<std::string> split(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

// Length of the bracketed JSON value starting at pos.
std::size_t bracket_extent(const std::string& s, std::size_t pos, int line) {
    if (pos >= s.size() || s[pos] != '[') throw ParseError(line, "expected a face list starting with '['");
    int depth = 0;
    for (std::size_t i = pos; i < s.size(); ++i) {
        if (s[i] == '[') ++depth;
        else if (s[i] == ']' && --depth == 0) return i + 1 - pos;
    }
    throw ParseError(line, "unterminated face list");
}

std::vector<SimplexRef> parse_faces(const std::string& json_text, int dim, const SimplicialSetBuilder& b, int line) {
    nlohmann::json faces;
    try {
        faces = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(line, std::string("malformed face list: ") + e.what());
    }
    if (!faces.is_array()) throw ParseError(line, "face list must be an array");
    const std::size_t expected = dim == 0 ? 0 : static_cast<std::size_t>(dim) + 1;
    if (faces.size() != expected)
        throw ParseError(line, "a " + std::to_string(dim) + "-simplex needs " + std::to_string(expected) + " faces, got " +
                                   std::to_string(faces.size()));
    std::vector<SimplexRef> out;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const auto& f = faces[i];
        const std::string where = "face " + std::to_string(i) + ": ";
        if (!f.is_array() || f.size() != 2 || !f[0].is_number_integer() || !f[1].is_array())
            throw ParseError(line, where + "expected [base-id, degeneracy-word]");
        DegeneracyWord word;
        for (const auto& letter : f[1]) {
            if (!letter.is_number_integer()) throw ParseError(line, where + "degeneracy letters must be integers");
            word.push_back(letter.get<int>());
        }
        const int face_dim = dim - 1;
        const int base_dim = face_dim - static_cast<int>(word.size());
        if (base_dim < 0 || !is_canonical_word(word, face_dim))
            throw ParseError(line, where + "degeneracy word is not strictly decreasing within range");
        const long long base = f[0].get<long long>();
        if (base < 0 || base >= static_cast<long long>(b.count(base_dim)))
            throw ParseError(line, where + "dangling face id " + std::to_string(base_dim) + ":" + std::to_string(base));
        out.push_back({base_dim, static_cast<int>(base), std::move(word)});
    }
    return out;
}

}  // namespace

SpaceDocument parse_document(std::string_view text) {
    auto lines = significant_lines(text);
    std::size_t pos = 0;
    auto next = [&]() -> const Line& {
        if (pos >= lines.size()) throw ParseError(0, "unexpected end of document (missing 'end')");
        return lines[pos++];
    };

    const auto& header = next();
    auto head = split(header.text);
    if (head.size() != 2 || head[0] != "SSET") throw ParseError(header.number, "expected header 'SSET 1'");
    if (head[1] != "1") throw ParseError(header.number, "unsupported format version " + head[1]);

    SpaceDocument doc;
    SimplicialSetBuilder b;
    int expected_dim = 0;
    for (;;) {
        const auto& line = next();
        if (line.text == "end") break;
        if (line.text.rfind("name ", 0) == 0) {
            if (expected_dim != 0 || !doc.name.empty()) throw ParseError(line.number, "'name' must directly follow the header");
            doc.name = line.text.substr(5);
            continue;
        }
        auto tokens = split(line.text);
        if (tokens.size() != 3 || tokens[0] != "dim") throw ParseError(line.number, "expected 'dim <d> <count>' or 'end'");
        const int d = parse_count(tokens[1], line.number, "dimension");
        if (d != expected_dim)
            throw ParseError(line.number, "expected block for dimension " + std::to_string(expected_dim) + ", got " + tokens[1]);
        const int count = parse_count(tokens[2], line.number, "generator count");
        for (int id = 0; id < count; ++id) {
            const auto& g = next();
            auto space = g.text.find(' ');
            if (space == std::string::npos) throw ParseError(g.number, "expected '<id> <faces> [name]'");
            const int given = parse_count(g.text.substr(0, space), g.number, "generator id");
            if (given != id)
                throw ParseError(g.number, "generator ids must be dense: expected " + std::to_string(id) + ", got " +
                                               std::to_string(given));
            const std::size_t start = space + 1;
            const std::size_t len = bracket_extent(g.text, start, g.number);
            auto faces = parse_faces(g.text.substr(start, len), d, b, g.number);
            std::string name;
            if (start + len < g.text.size()) {
                if (g.text[start + len] != ' ') throw ParseError(g.number, "expected a space before the generator name");
                name = g.text.substr(start + len + 1);
            }
            b.add(d, std::move(faces), std::move(name));
        }
        ++expected_dim;
    }
    if (pos != lines.size()) throw ParseError(lines[pos].number, "content after 'end'");

    doc.set = std::move(b).build();
    if (auto report = doc.set.validate(); !report)
        throw ParseError(0, "invalid simplicial set: " + report.message);
    return doc;
}

std::string print_space(const SimplicialSet& k, const std::string& name) {
    std::ostringstream out;
    out << "SSET 1\n";
    if (!name.empty()) out << "name " << name << '\n';
    for (int d = 0; d <= k.top_dim(); ++d) {
        out << "dim " << d << ' ' << k.count(d) << '\n';
        for (int id = 0; id < static_cast<int>(k.count(d)); ++id) {
            const auto& g = k.generator(d, id);
            auto faces = nlohmann::json::array();
            for (const auto& f : g.faces) faces.push_back({f.base, f.word});
            out << id << ' ' << faces.dump();
            if (!g.name.empty()) out << ' ' << g.name;
            out << '\n';
        }
    }
    out << "end\n";
    return out.str();
}

}  // namespace simplicial

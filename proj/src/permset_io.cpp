#include "ptrans/perm.hpp"

#include "ptrans/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace ptrans {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

} // namespace

PermSet read_perm_set(std::string_view text)
{
    int degree = 0;
    std::vector<Permutation> elements;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        const std::string_view line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (line.empty() || line.front() == '#')
            continue;
        if (degree == 0) {
            if (line.size() < 2 || line[0] != 'n' || (line[1] != ' ' && line[1] != '\t'))
                throw ParseError(line_no, 1, "expected header 'n <degree>'");
            const std::string_view num = trim(line.substr(1));
            auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), degree);
            if (ec != std::errc() || ptr != num.data() + num.size() || degree < 1)
                throw ParseError(line_no, 3, "malformed degree '" + std::string(num) + "'");
            continue;
        }
        elements.push_back(parse_perm(line, degree, line_no));
    }
    if (degree == 0)
        throw ParseError(line_no + 1, 1, "missing header 'n <degree>'");
    try {
        return PermSet(degree, std::move(elements));
    } catch (const InputError& e) {
        throw InputError(std::string("permutation set: ") + e.what());
    }
}

PermSet read_perm_set_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return read_perm_set(buffer.str());
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string write_perm_set(const PermSet& set, std::string_view comment)
{
    std::string out;
    if (!comment.empty()) {
        out += "# ";
        out += comment;
        out += '\n';
    }
    out += "n " + std::to_string(set.degree()) + "\n";
    for (const auto& g : set)
        out += g.to_one_line_string() + "\n";
    return out;
}

} // namespace ptrans

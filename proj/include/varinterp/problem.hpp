#pragma once

/**
 * @file problem.hpp
 * @brief Line-oriented problem files.
 *
 *     # comment
 *     ring x y z [over Qi]
 *     ideal J1 = z - x; x^2 + y     (semicolon-separated generators)
 *     data p1 on J1 = x
 *     operator L = x^2 + y^2        (optional)
 *     mode sequential               (optional)
 *
 * The ring line comes first. Names of ideals, data and the operator share one
 * namespace. Every error is a ParseError carrying the line and column.
 */

#include <cctype>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "ideal.hpp"
#include "interp.hpp"
#include "parse.hpp"
#include "polynomial.hpp"

namespace varinterp {

struct NamedIdeal {
    std::string name;
    Ideal ideal;
};

struct NamedDatum {
    std::string name;
    std::string ideal_name;
    std::size_t ideal_index;
    Polynomial value;
};

struct ProblemFile {
    RingPtr ring;
    std::vector<NamedIdeal> ideals;
    std::vector<NamedDatum> data;
    std::optional<std::string> operator_name;
    std::optional<Polynomial> op;
    std::optional<std::string> mode;

    /// One interpolation condition per data line, in file order.
    InterpolationProblem interpolation_problem() const {
        InterpolationProblem pr;
        for (const auto& d : data) {
            pr.ideals.push_back(ideals[d.ideal_index].ideal);
            pr.data.push_back(d.value);
        }
        return pr;
    }
};

inline const std::vector<std::string>& interpolation_modes() {
    static const std::vector<std::string> modes{"disjoint", "pair", "sequential", "restricted"};
    return modes;
}

namespace detail {

class ProblemParser {
public:
    ProblemFile parse(std::string_view text) {
        std::size_t line_no = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            ++line_no;
            std::string_view line = text.substr(start, end - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            parse_line(line, line_no);
            start = end + 1;
        }
        if (!file_.ring) throw ParseError("missing ring declaration", line_no, 1);
        return std::move(file_);
    }

private:
    struct Word {
        std::string text;
        std::size_t column;
    };

    // Reads whitespace-separated words up to '=' (if `stop_at_equals`) and returns the column after it.
    static std::vector<Word> words(std::string_view line, bool stop_at_equals, std::size_t& rest_column) {
        std::vector<Word> out;
        std::size_t i = 0;
        rest_column = 0;
        while (i < line.size()) {
            char c = line[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (stop_at_equals && c == '=') {
                rest_column = i + 2;
                return out;
            }
            std::size_t s = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && !(stop_at_equals && line[i] == '='))
                ++i;
            out.push_back({std::string(line.substr(s, i - s)), s + 1});
        }
        return out;
    }

    static bool is_identifier(const std::string& s) {
        if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
        for (char c : s)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
        return true;
    }

    void parse_line(std::string_view line, std::size_t n) {
        std::size_t rest = 0;
        auto head = words(line, false, rest);
        if (head.empty()) return;
        const std::string& key = head[0].text;
        if (key == "ring") return parse_ring(head, n);
        if (!file_.ring) throw ParseError("expected 'ring' declaration first", n, head[0].column);
        if (key == "ideal") return parse_ideal(line, n);
        if (key == "data") return parse_data(line, n);
        if (key == "operator") return parse_operator(line, n);
        if (key == "mode") return parse_mode(head, n);
        throw ParseError("unknown key '" + key + "'", n, head[0].column);
    }

    void parse_ring(const std::vector<Word>& w, std::size_t n) {
        if (file_.ring) throw ParseError("duplicate ring declaration", n, w[0].column);
        Field field = Field::rational;
        std::size_t end = w.size();
        if (end >= 2 && w[end - 2].text == "over") {
            const Word& f = w[end - 1];
            if (f.text == "Qi") field = Field::gaussian_rational;
            else if (f.text != "Q") throw ParseError("unknown field '" + f.text + "' (expected Q or Qi)", n, f.column);
            end -= 2;
        }
        std::vector<std::string> vars;
        for (std::size_t k = 1; k < end; ++k) {
            const Word& v = w[k];
            if (!is_identifier(v.text)) throw ParseError("invalid variable name '" + v.text + "'", n, v.column);
            if (v.text[0] == '_') throw ParseError("variable names starting with '_' are reserved", n, v.column);
            if (v.text == "over") throw ParseError("expected a field after 'over'", n, v.column);
            if (v.text == "i" && field == Field::gaussian_rational)
                throw ParseError("'i' is the imaginary unit over Qi", n, v.column);
            if (std::find(vars.begin(), vars.end(), v.text) != vars.end())
                throw ParseError("duplicate variable '" + v.text + "'", n, v.column);
            vars.push_back(v.text);
        }
        if (vars.empty()) throw ParseError("ring needs at least one variable", n, w[0].column);
        file_.ring = Ring::make(std::move(vars), field);
    }

    // "<key> NAME [on IDEAL] = ..." returns the words before '=' and the expression column.
    std::vector<Word> header(std::string_view line, std::size_t n, std::size_t& rest) const {
        auto w = words(line, true, rest);
        if (rest == 0) throw ParseError("expected '='", n, line.size() + 1);
        return w;
    }

    void declare(const Word& name, std::size_t n) {
        if (!is_identifier(name.text)) throw ParseError("invalid name '" + name.text + "'", n, name.column);
        if (std::find(names_.begin(), names_.end(), name.text) != names_.end())
            throw ParseError("duplicate name '" + name.text + "'", n, name.column);
        names_.push_back(name.text);
    }

    Polynomial expression(std::string_view line, std::size_t from, std::size_t to, std::size_t n) const {
        std::string_view text = line.substr(from - 1, to - from);
        return ExpressionParser(file_.ring, text, n, from).parse();
    }

    void parse_ideal(std::string_view line, std::size_t n) {
        std::size_t rest = 0;
        auto w = header(line, n, rest);
        if (w.size() != 2) throw ParseError("expected 'ideal NAME = generators'", n, w[0].column);
        declare(w[1], n);
        std::vector<Polynomial> gens;
        std::size_t from = rest;
        for (;;) {
            std::size_t semi = line.find(';', from - 1);
            std::size_t to = semi == std::string_view::npos ? line.size() + 1 : semi + 1;
            gens.push_back(expression(line, from, to, n));
            if (semi == std::string_view::npos) break;
            from = semi + 2;
        }
        file_.ideals.push_back({w[1].text, Ideal(file_.ring, std::move(gens))});
    }

    void parse_data(std::string_view line, std::size_t n) {
        std::size_t rest = 0;
        auto w = header(line, n, rest);
        if (w.size() != 4 || w[2].text != "on")
            throw ParseError("expected 'data NAME on IDEAL = polynomial'", n, w[0].column);
        declare(w[1], n);
        std::optional<std::size_t> index;
        for (std::size_t k = 0; k < file_.ideals.size(); ++k)
            if (file_.ideals[k].name == w[3].text) index = k;
        if (!index) throw ParseError("unknown ideal '" + w[3].text + "'", n, w[3].column);
        file_.data.push_back({w[1].text, w[3].text, *index, expression(line, rest, line.size() + 1, n)});
    }

    void parse_operator(std::string_view line, std::size_t n) {
        std::size_t rest = 0;
        auto w = header(line, n, rest);
        if (w.size() != 2) throw ParseError("expected 'operator NAME = polynomial'", n, w[0].column);
        if (file_.op) throw ParseError("duplicate operator", n, w[0].column);
        declare(w[1], n);
        file_.operator_name = w[1].text;
        file_.op = expression(line, rest, line.size() + 1, n);
    }

    void parse_mode(const std::vector<Word>& w, std::size_t n) {
        if (w.size() != 2) throw ParseError("expected 'mode NAME'", n, w[0].column);
        if (file_.mode) throw ParseError("duplicate mode", n, w[0].column);
        const auto& modes = interpolation_modes();
        if (std::find(modes.begin(), modes.end(), w[1].text) == modes.end())
            throw ParseError("unknown mode '" + w[1].text + "'", n, w[1].column);
        file_.mode = w[1].text;
    }

    ProblemFile file_;
    std::vector<std::string> names_;
};

}  // namespace detail

inline ProblemFile parse_problem(std::string_view text) { return detail::ProblemParser().parse(text); }

inline ProblemFile parse_problem(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem(buffer.str());
}

}  // namespace varinterp

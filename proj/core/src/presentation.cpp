#include "talex/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace talex {

int Presentation::generator_index(const std::string& name) const {
    auto it = std::find(generators.begin(), generators.end(), name);
    if (it == generators.end()) return -1;
    return static_cast<int>(it - generators.begin());
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Recursive-descent word parser over generator names and macro words.
class WordParser {
  public:
    WordParser(const std::string& text, const std::vector<std::string>& generators,
               const std::map<std::string, Word>& macros)
        : text_(text), gens_(generators), macros_(macros) {}

    Word parse() {
        Word w = parse_word();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        if (w.is_identity() && !saw_atom_) fail("empty word");
        return w;
    }

  private:
    const std::string& text_;
    const std::vector<std::string>& gens_;
    const std::map<std::string, Word>& macros_;
    std::size_t pos_ = 0;
    bool saw_atom_ = false;

    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream out;
        out << msg << " at position " << (pos_ + 1);
        throw ParseError(out.str(), pos_ + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_atom_start() {
        skip_ws();
        return pos_ < text_.size() && (ident_start(text_[pos_]) || text_[pos_] == '(');
    }

    Word parse_word() {
        Word w;
        if (!at_atom_start()) fail("expected a generator or '('");
        while (at_atom_start()) w *= parse_term();
        return w;
    }

    Word parse_term() {
        Word atom = parse_atom();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            return atom.pow(parse_int());
        }
        return atom;
    }

    Word parse_atom() {
        skip_ws();
        saw_atom_ = true;
        if (text_[pos_] == '(') {
            ++pos_;
            Word inner = parse_word();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')') fail("unbalanced parenthesis");
            ++pos_;
            return inner;
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        Word resolved;
        std::size_t save = pos_;
        pos_ = start; // error position points at the name
        if (!resolve(name, resolved)) fail("unknown generator '" + name + "'");
        pos_ = save;
        return resolved;
    }

    bool resolve(const std::string& name, Word& out) const {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i] == name) {
                out = Word::generator(static_cast<int>(i));
                return true;
            }
        if (auto it = macros_.find(name); it != macros_.end()) {
            out = it->second;
            return true;
        }
        // Uppercase single letter: inverse of the lowercase generator/macro.
        if (name.size() == 1 && std::isupper(static_cast<unsigned char>(name[0]))) {
            std::string lower(1, static_cast<char>(std::tolower(static_cast<unsigned char>(name[0]))));
            Word base;
            if (resolve(lower, base)) {
                out = base.inverse();
                return true;
            }
        }
        return false;
    }

    long parse_int() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("malformed exponent");
        }
        return std::stol(text_.substr(start, pos_ - start));
    }
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void line_fail(std::size_t lineno, const std::string& msg) {
    std::ostringstream out;
    out << "line " << lineno << ": " << msg;
    throw ParseError(out.str(), lineno);
}

} // namespace

Word word_parse(const std::string& text, const std::vector<std::string>& generators) {
    return WordParser(text, generators, {}).parse();
}

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::map<std::string, Word> macros;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool have_gens = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t colon = t.find(':');
        std::string kind = colon == std::string::npos ? "" : trim(t.substr(0, colon));
        if (kind == "gens") {
            if (have_gens) line_fail(lineno, "duplicate gens line");
            std::istringstream names(t.substr(colon + 1));
            std::string name;
            while (names >> name) {
                if (p.generator_index(name) >= 0)
                    line_fail(lineno, "duplicate generator '" + name + "'");
                p.generators.push_back(name);
            }
            if (p.generators.empty()) line_fail(lineno, "gens line declares no generators");
            p.degrees.assign(p.generators.size(), 1);
            have_gens = true;
        } else if (kind == "deg") {
            if (!have_gens) line_fail(lineno, "deg line before gens line");
            std::istringstream items(t.substr(colon + 1));
            std::string item;
            while (items >> item) {
                std::size_t eq = item.find('=');
                if (eq == std::string::npos) line_fail(lineno, "expected name=value in deg line");
                int idx = p.generator_index(item.substr(0, eq));
                if (idx < 0)
                    line_fail(lineno, "unknown generator '" + item.substr(0, eq) + "' in deg line");
                try {
                    p.degrees[static_cast<std::size_t>(idx)] = std::stoi(item.substr(eq + 1));
                } catch (const std::exception&) {
                    line_fail(lineno, "malformed degree value in '" + item + "'");
                }
            }
        } else if (kind == "rel") {
            if (!have_gens) line_fail(lineno, "rel line before gens line");
            try {
                p.relators.push_back(WordParser(t.substr(colon + 1), p.generators, macros).parse());
            } catch (const ParseError& e) {
                line_fail(lineno, e.what());
            }
        } else if (t.rfind("let", 0) == 0 && t.size() > 3 &&
                   std::isspace(static_cast<unsigned char>(t[3]))) {
            if (!have_gens) line_fail(lineno, "let line before gens line");
            std::size_t eq = t.find('=');
            if (eq == std::string::npos) line_fail(lineno, "expected '=' in let line");
            std::string name = trim(t.substr(3, eq - 3));
            if (name.empty() || !ident_start(name[0]) ||
                !std::all_of(name.begin(), name.end(), ident_char))
                line_fail(lineno, "bad macro name '" + name + "'");
            if (p.generator_index(name) >= 0 || macros.count(name))
                line_fail(lineno, "macro name '" + name + "' already in use");
            try {
                macros[name] = WordParser(t.substr(eq + 1), p.generators, macros).parse();
            } catch (const ParseError& e) {
                line_fail(lineno, e.what());
            }
        } else {
            line_fail(lineno, "unrecognized line '" + t + "'");
        }
    }
    if (!have_gens) throw ParseError("missing gens line", 0);
    return p;
}

Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open presentation file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

std::string format_presentation(const Presentation& p) {
    std::ostringstream out;
    out << "gens:";
    for (const auto& g : p.generators) out << " " << g;
    out << "\ndeg:";
    for (std::size_t i = 0; i < p.generators.size(); ++i)
        out << " " << p.generators[i] << "=" << p.degrees[i];
    out << "\n";
    for (const auto& r : p.relators) out << "rel: " << r.to_string(p.generators) << "\n";
    return out.str();
}

} // namespace talex

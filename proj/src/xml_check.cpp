#include "hfmap/xml_check.hpp"

#include <cctype>
#include <vector>

namespace hfmap {

namespace {

bool name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}

bool name_char(char c) {
    return name_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '.';
}

class Scanner {
public:
    explicit Scanner(std::string_view doc) : s_(doc) {}

    XmlCheck run() {
        XmlCheck out;
        skip_space();
        if (starts("<?xml")) {
            const auto end = s_.find("?>", pos_);
            if (end == std::string_view::npos) {
                return fail(out, "unterminated prolog");
            }
            pos_ = end + 2;
        }
        skip_misc();
        std::vector<std::string> stack;
        bool root_closed = false;
        while (pos_ < s_.size()) {
            if (s_[pos_] == '<') {
                if (starts("<!--")) {
                    if (!skip_comment()) {
                        return fail(out, "unterminated comment");
                    }
                    continue;
                }
                if (starts("</")) {
                    pos_ += 2;
                    const std::string name = read_name();
                    skip_space();
                    if (name.empty() || pos_ >= s_.size() || s_[pos_] != '>') {
                        return fail(out, "malformed end tag");
                    }
                    ++pos_;
                    if (stack.empty() || stack.back() != name) {
                        return fail(out, "mismatched end tag </" + name + ">");
                    }
                    stack.pop_back();
                    if (stack.empty()) {
                        root_closed = true;
                        skip_misc();
                    }
                    continue;
                }
                if (root_closed) {
                    return fail(out, "content after the root element");
                }
                ++pos_;
                const std::string name = read_name();
                if (name.empty()) {
                    return fail(out, "malformed start tag");
                }
                if (stack.empty()) {
                    out.root = name;
                }
                ++out.elements;
                std::vector<std::string> attrs;
                for (;;) {
                    const bool spaced = skip_space();
                    if (pos_ >= s_.size()) {
                        return fail(out, "unterminated tag <" + name + ">");
                    }
                    if (starts("/>")) {
                        pos_ += 2;
                        if (stack.empty()) {
                            root_closed = true;
                            skip_misc();
                        }
                        break;
                    }
                    if (s_[pos_] == '>') {
                        ++pos_;
                        stack.push_back(name);
                        break;
                    }
                    if (!spaced) {
                        return fail(out, "missing space before attribute in <" + name + ">");
                    }
                    const std::string attr = read_name();
                    if (attr.empty()) {
                        return fail(out, "malformed attribute in <" + name + ">");
                    }
                    for (const auto& a : attrs) {
                        if (a == attr) {
                            return fail(out, "duplicate attribute " + attr);
                        }
                    }
                    attrs.push_back(attr);
                    skip_space();
                    if (pos_ >= s_.size() || s_[pos_] != '=') {
                        return fail(out, "attribute without value");
                    }
                    ++pos_;
                    skip_space();
                    if (pos_ >= s_.size() || (s_[pos_] != '"' && s_[pos_] != '\'')) {
                        return fail(out, "unquoted attribute value");
                    }
                    const char quote = s_[pos_++];
                    while (pos_ < s_.size() && s_[pos_] != quote) {
                        if (s_[pos_] == '<') {
                            return fail(out, "'<' in attribute value");
                        }
                        if (s_[pos_] == '&' && !entity()) {
                            return fail(out, "bad entity in attribute value");
                        }
                        if (pos_ < s_.size() && s_[pos_] != quote) {
                            ++pos_;
                        }
                    }
                    if (pos_ >= s_.size()) {
                        return fail(out, "unterminated attribute value");
                    }
                    ++pos_;
                }
                continue;
            }
            if (stack.empty()) {
                return fail(out, "text outside the root element");
            }
            if (s_[pos_] == '&') {
                if (!entity()) {
                    return fail(out, "bad entity reference");
                }
                continue;
            }
            if (s_[pos_] == '>' && pos_ >= 2 && s_.substr(pos_ - 2, 2) == "]]") {
                return fail(out, "']]>' in text");
            }
            ++pos_;
        }
        if (out.root.empty()) {
            return fail(out, "no root element");
        }
        if (!stack.empty()) {
            return fail(out, "unclosed element <" + stack.back() + ">");
        }
        out.ok = true;
        return out;
    }

private:
    static XmlCheck& fail(XmlCheck& out, std::string why) {
        out.ok = false;
        out.error = std::move(why);
        return out;
    }

    bool starts(std::string_view t) const { return s_.substr(pos_, t.size()) == t; }

    bool skip_space() {
        const std::size_t from = pos_;
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        return pos_ != from;
    }

    bool skip_comment() {
        const auto end = s_.find("-->", pos_ + 4);
        if (end == std::string_view::npos) {
            return false;
        }
        pos_ = end + 3;
        return true;
    }

    void skip_misc() {
        for (;;) {
            skip_space();
            if (starts("<!--") && skip_comment()) {
                continue;
            }
            return;
        }
    }

    std::string read_name() {
        std::string name;
        if (pos_ < s_.size() && name_start(s_[pos_])) {
            while (pos_ < s_.size() && name_char(s_[pos_])) {
                name += s_[pos_++];
            }
        }
        return name;
    }

    // At '&'; consumes a valid reference and returns true.
    bool entity() {
        const auto end = s_.find(';', pos_);
        if (end == std::string_view::npos) {
            return false;
        }
        const std::string_view body = s_.substr(pos_ + 1, end - pos_ - 1);
        bool valid = body == "amp" || body == "lt" || body == "gt" || body == "quot" || body == "apos";
        if (!valid && body.size() > 1 && body[0] == '#') {
            valid = true;
            const bool hex = body[1] == 'x';
            const std::string_view digits = body.substr(hex ? 2 : 1);
            valid = !digits.empty();
            for (char c : digits) {
                valid = valid && (hex ? std::isxdigit(static_cast<unsigned char>(c)) != 0
                                      : std::isdigit(static_cast<unsigned char>(c)) != 0);
            }
        }
        if (valid) {
            pos_ = end + 1;
        }
        return valid;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

XmlCheck check_xml(std::string_view doc) {
    return Scanner(doc).run();
}

std::size_t count_elements(std::string_view doc, std::string_view name) {
    std::size_t count = 0;
    const std::string open = "<" + std::string(name);
    for (auto at = doc.find(open); at != std::string_view::npos; at = doc.find(open, at + 1)) {
        const std::size_t after = at + open.size();
        if (after < doc.size() && !name_char(doc[after])) {
            ++count;
        }
    }
    return count;
}

} // namespace hfmap

// Copyright 2026 The qecsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// A small XML well-formedness checker for the chart tests. It handles the
// subset a generated SVG uses: a prolog, elements, quoted attributes,
// character data and the five predefined entities.

#ifndef QECSIM_TESTS_XML_CHECK_H
#define QECSIM_TESTS_XML_CHECK_H

#include <cctype>
#include <map>
#include <string>
#include <vector>

namespace qecsim::testing {

struct XmlElement {
    std::string name;
    std::map<std::string, std::string> attributes;
};

struct XmlCheck {
    bool well_formed = false;
    std::string error;
    std::vector<XmlElement> elements;  // document order
};

inline bool xml_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':' || c == '.';
}

inline bool valid_char_data(const std::string& text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '<') return false;
        if (text[i] != '&') continue;
        const auto semi = text.find(';', i);
        if (semi == std::string::npos) return false;
        const std::string ent = text.substr(i + 1, semi - i - 1);
        if (ent != "amp" && ent != "lt" && ent != "gt" && ent != "quot" && ent != "apos") return false;
        i = semi;
    }
    return true;
}

inline XmlCheck check_xml(const std::string& doc) {
    XmlCheck out;
    std::vector<std::string> stack;
    std::size_t i = 0;
    bool root_seen = false;
    auto fail = [&](const std::string& why) {
        out.well_formed = false;
        out.error = why + " at offset " + std::to_string(i);
        return out;
    };
    if (doc.rfind("<?xml", 0) == 0) {
        i = doc.find("?>");
        if (i == std::string::npos) return fail("unterminated prolog");
        i += 2;
    }
    while (i < doc.size()) {
        const auto lt = doc.find('<', i);
        const std::string text = doc.substr(i, lt == std::string::npos ? std::string::npos : lt - i);
        if (!valid_char_data(text)) return fail("bad character data");
        if (stack.empty() && text.find_first_not_of(" \t\r\n") != std::string::npos) return fail("text outside root");
        if (lt == std::string::npos) break;
        i = lt + 1;
        if (doc.compare(i, 3, "!--") == 0) {
            const auto end = doc.find("-->", i);
            if (end == std::string::npos) return fail("unterminated comment");
            i = end + 3;
            continue;
        }
        const bool closing = i < doc.size() && doc[i] == '/';
        if (closing) ++i;
        std::size_t start = i;
        while (i < doc.size() && xml_name_char(doc[i])) ++i;
        const std::string name = doc.substr(start, i - start);
        if (name.empty()) return fail("empty tag name");
        if (closing) {
            while (i < doc.size() && std::isspace(static_cast<unsigned char>(doc[i]))) ++i;
            if (i >= doc.size() || doc[i] != '>') return fail("bad closing tag");
            ++i;
            if (stack.empty() || stack.back() != name) return fail("mismatched </" + name + ">");
            stack.pop_back();
            continue;
        }
        if (stack.empty() && root_seen) return fail("second root element");
        root_seen = true;
        XmlElement el{name, {}};
        bool self_closing = false;
        while (true) {
            while (i < doc.size() && std::isspace(static_cast<unsigned char>(doc[i]))) ++i;
            if (i >= doc.size()) return fail("unterminated tag");
            if (doc[i] == '>') {
                ++i;
                break;
            }
            if (doc.compare(i, 2, "/>") == 0) {
                i += 2;
                self_closing = true;
                break;
            }
            start = i;
            while (i < doc.size() && xml_name_char(doc[i])) ++i;
            const std::string attr = doc.substr(start, i - start);
            if (attr.empty() || i >= doc.size() || doc[i] != '=') return fail("bad attribute");
            ++i;
            if (i >= doc.size() || (doc[i] != '"' && doc[i] != '\'')) return fail("unquoted attribute");
            const char quote = doc[i++];
            const auto end = doc.find(quote, i);
            if (end == std::string::npos) return fail("unterminated attribute");
            const std::string value = doc.substr(i, end - i);
            if (!valid_char_data(value)) return fail("bad attribute value");
            if (!el.attributes.emplace(attr, value).second) return fail("duplicate attribute " + attr);
            i = end + 1;
        }
        out.elements.push_back(el);
        if (!self_closing) stack.push_back(name);
    }
    if (!stack.empty()) return fail("unclosed <" + stack.back() + ">");
    if (!root_seen) return fail("no root element");
    out.well_formed = true;
    return out;
}

}  // namespace qecsim::testing

#endif  // QECSIM_TESTS_XML_CHECK_H

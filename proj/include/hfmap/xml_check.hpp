#pragma once

// Minimal XML well-formedness check for the documents this library emits:
// an optional prolog, comments, one root element, quoted attributes, the five
// predefined entities and numeric character references.

#include <string>
#include <string_view>

namespace hfmap {

struct XmlCheck {
    bool ok = false;
    std::string root;  // name of the root element
    std::size_t elements = 0;
    std::string error; // first problem found
};

XmlCheck check_xml(std::string_view doc);

// Number of start or empty-element tags with the given name.
std::size_t count_elements(std::string_view doc, std::string_view name);

} // namespace hfmap

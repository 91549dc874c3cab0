#include "abfold/errors.hpp"
#include "abfold/model.hpp"

#include <algorithm>
#include <cctype>

#include <fmt/core.h>

namespace abfold {

char to_char(MonomerClass m)
{
    return m == MonomerClass::A ? 'A' : 'B';
}

AbSequence::AbSequence(std::vector<MonomerClass> residues, std::string label)
    : residues_(std::move(residues)), label_(std::move(label))
{
    if (residues_.size() < 3) {
        throw InstanceTooSmall(
            fmt::format("sequence has {} monomers, at least 3 are required", residues_.size()));
    }
    hydrophobic_count_ = static_cast<std::size_t>(
        std::count(residues_.begin(), residues_.end(), MonomerClass::A));
}

std::string AbSequence::to_string() const
{
    std::string s;
    s.reserve(residues_.size());
    for (auto m : residues_) {
        s.push_back(to_char(m));
    }
    return s;
}

namespace {

// Walks `text` skipping whitespace and '>'-header lines, handing every other
// byte (with its 1-based offset) to `on_char`.
template <class F>
void scan_residue_text(std::string_view text, F&& on_char)
{
    bool line_start = true;
    bool in_header = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == '\n' || ch == '\r') {
            line_start = true;
            in_header = false;
            continue;
        }
        if (in_header) {
            continue;
        }
        if (line_start && ch == '>') {
            in_header = true;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            continue;
        }
        line_start = false;
        on_char(ch, i + 1);
    }
}

} // namespace

AbSequence parse_ab_sequence(std::string_view text, std::string label)
{
    std::vector<MonomerClass> residues;
    scan_residue_text(text, [&](char ch, std::size_t offset) {
        switch (std::toupper(static_cast<unsigned char>(ch))) {
        case 'A':
            residues.push_back(MonomerClass::A);
            break;
        case 'B':
            residues.push_back(MonomerClass::B);
            break;
        default:
            throw ParseError(
                fmt::format("unexpected character '{}' at offset {} (only A/B allowed)", ch, offset),
                offset);
        }
    });
    return AbSequence(std::move(residues), std::move(label));
}

AbSequence kd_transform(std::string_view one_letter, std::string label)
{
    static constexpr std::string_view hydrophobic = "IVPLCMAG";
    static constexpr std::string_view hydrophilic = "DEHFKNQRSTWY";

    std::vector<MonomerClass> residues;
    scan_residue_text(one_letter, [&](char ch, std::size_t offset) {
        const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        if (hydrophobic.find(up) != std::string_view::npos) {
            residues.push_back(MonomerClass::A);
        } else if (hydrophilic.find(up) != std::string_view::npos) {
            residues.push_back(MonomerClass::B);
        } else {
            throw ParseError(
                fmt::format("'{}' at offset {} is not a standard amino acid code", ch, offset),
                offset);
        }
    });
    return AbSequence(std::move(residues), std::move(label));
}

} // namespace abfold

#include "ncp/partition.hpp"

#include "ncp/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ncp {

namespace {

// Scan the legs left to right keeping a stack of open blocks: a partition is
// noncrossing exactly when every leg either opens a new block or belongs to
// the block currently on top.
void check_noncrossing(const std::vector<std::vector<int>>& blocks,
                       const std::vector<int>& owner, int legs) {
    std::vector<int> seen(blocks.size(), 0);
    std::vector<int> stack;
    for (int leg = 1; leg <= legs; ++leg) {
        int b = owner[leg];
        if (seen[b] == 0) {
            stack.push_back(b);
        } else if (stack.empty() || stack.back() != b) {
            // Identify one crossing pair for the message.
            for (std::size_t i = 0; i < blocks.size(); ++i)
                for (std::size_t j = i + 1; j < blocks.size(); ++j) {
                    int changes = 0, last = -1;
                    std::size_t pi = 0, pj = 0;
                    while (pi < blocks[i].size() || pj < blocks[j].size()) {
                        int who;
                        if (pj == blocks[j].size() ||
                            (pi < blocks[i].size() && blocks[i][pi] < blocks[j][pj])) {
                            who = 0;
                            ++pi;
                        } else {
                            who = 1;
                            ++pj;
                        }
                        if (last != -1 && who != last) ++changes;
                        last = who;
                    }
                    if (changes >= 3) {
                        std::ostringstream out;
                        out << "blocks cross: {";
                        for (std::size_t t = 0; t < blocks[i].size(); ++t)
                            out << (t ? "," : "") << blocks[i][t];
                        out << "} and {";
                        for (std::size_t t = 0; t < blocks[j].size(); ++t)
                            out << (t ? "," : "") << blocks[j][t];
                        out << "}";
                        throw Crossing(out.str());
                    }
                }
            throw Crossing("blocks cross");
        }
        ++seen[b];
        if (seen[b] == static_cast<int>(blocks[b].size()) && !stack.empty() &&
            stack.back() == b)
            stack.pop_back();
    }
}

} // namespace

NoncrossingPartition NoncrossingPartition::from_blocks(std::vector<std::vector<int>> blocks) {
    NoncrossingPartition p;
    for (auto& b : blocks) {
        if (b.empty()) throw NotAPartition("empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    int legs = 0;
    for (const auto& b : blocks) legs = std::max(legs, b.back());
    std::vector<int> owner(legs + 1, -1);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (int e : blocks[i]) {
            if (e < 1) throw NotAPartition("element " + std::to_string(e) + " out of range");
            if (owner[e] != -1)
                throw NotAPartition("element " + std::to_string(e) + " appears twice");
            owner[e] = static_cast<int>(i);
        }
    for (int e = 1; e <= legs; ++e)
        if (owner[e] == -1)
            throw NotAPartition("element " + std::to_string(e) + " is missing");
    check_noncrossing(blocks, owner, legs);
    p.legs_ = legs;
    p.blocks_ = std::move(blocks);
    p.owner_ = std::move(owner);
    std::ostringstream out;
    for (std::size_t i = 0; i < p.blocks_.size(); ++i) {
        if (i) out << '|';
        for (std::size_t t = 0; t < p.blocks_[i].size(); ++t) {
            if (t) out << ',';
            out << p.blocks_[i][t];
        }
    }
    p.text_ = out.str();
    return p;
}

NoncrossingPartition NoncrossingPartition::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) return NoncrossingPartition();

    std::vector<std::vector<int>> blocks(1);
    int value = -1;
    int prev = 0;
    auto flush = [&](char next) {
        if (value < 0)
            throw ParseError(std::string("expected element before '") + next + "'");
        if (!blocks.back().empty() && value <= prev)
            throw ParseError("elements must be ascending within a block");
        blocks.back().push_back(value);
        prev = value;
        value = -1;
    };
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            if (value < 0) value = 0;
            if (value > 1'000'000) throw ParseError("element too large");
            value = value * 10 + (c - '0');
        } else if (c == ',') {
            flush(',');
        } else if (c == '|') {
            flush('|');
            blocks.emplace_back();
            prev = 0;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'");
        }
    }
    flush('$');
    return from_blocks(std::move(blocks));
}

int NoncrossingPartition::block_of(int leg) const {
    return owner_[leg];
}

std::strong_ordering NoncrossingPartition::operator<=>(const NoncrossingPartition& o) const {
    if (auto c = legs_ <=> o.legs_; c != 0) return c;
    if (auto c = blocks_.size() <=> o.blocks_.size(); c != 0) return c;
    return text_ <=> o.text_;
}

BlockEquivalence BlockEquivalence::from_classes(std::vector<std::vector<int>> cls) {
    for (auto& c : cls) std::sort(c.begin(), c.end());
    std::sort(cls.begin(), cls.end());
    BlockEquivalence e;
    e.classes = std::move(cls);
    return e;
}

PartitionProfile profile(const NoncrossingPartition& p) {
    PartitionProfile pr;
    for (const auto& b : p.blocks()) {
        int k = static_cast<int>(b.size());
        if (static_cast<int>(pr.counts.size()) < k) pr.counts.resize(k, 0);
        ++pr.counts[k - 1];
    }
    return pr;
}

} // namespace ncp

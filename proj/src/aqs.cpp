#include "lq/aqs.hpp"

#include "lq/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lq {

AQS AQS::top(int n) {
    AQS a;
    QubitSet all;
    for (int q = 1; q <= n; ++q)
        all.push_back(q);
    a.blocks.push_back(all);
    a.normalize();
    return a;
}

AQS AQS::all_pure(int n) {
    AQS a;
    for (int q = 1; q <= n; ++q)
        a.pure.push_back(q);
    return a;
}

void AQS::normalize() {
    for (auto &b : blocks) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    std::erase_if(blocks, [](const QubitSet &b) { return b.size() < 2; });
    std::sort(blocks.begin(), blocks.end());
    std::sort(pure.begin(), pure.end());
    pure.erase(std::unique(pure.begin(), pure.end()), pure.end());
}

const QubitSet *AQS::block_of(int q) const {
    for (const auto &b : blocks)
        if (std::binary_search(b.begin(), b.end(), q))
            return &b;
    return nullptr;
}

bool AQS::related(int x, int y) const {
    const auto *b = block_of(x);
    return b && std::binary_search(b->begin(), b->end(), y);
}

bool AQS::is_pure(int q) const { return std::binary_search(pure.begin(), pure.end(), q); }

bool AQS::well_formed() const {
    QubitSet seen;
    for (const auto &b : blocks) {
        if (b.size() < 2)
            return false;
        for (int q : b) {
            if (std::find(seen.begin(), seen.end(), q) != seen.end() || is_pure(q))
                return false;
            seen.push_back(q);
        }
    }
    return true;
}

AQS aqs_merge(const AQS &a, int i, int j) {
    AQS out;
    QubitSet joined{i, j};
    for (const auto &b : a.blocks) {
        if (std::binary_search(b.begin(), b.end(), i) || std::binary_search(b.begin(), b.end(), j))
            joined.insert(joined.end(), b.begin(), b.end());
        else
            out.blocks.push_back(b);
    }
    out.blocks.push_back(std::move(joined));
    for (int q : a.pure)
        if (q != i && q != j)
            out.pure.push_back(q);
    out.normalize();
    return out;
}

AQS aqs_remove(const AQS &a, int i) {
    AQS out = a;
    for (auto &b : out.blocks)
        std::erase(b, i);
    out.normalize();
    return out;
}

bool adequate(const AQS &a, const QuantumState &s, double tol) {
    const int n = s.qubits();
    for (int q : a.pure)
        if (q < 1 || q > n)
            throw Error("abstract state mentions q" + std::to_string(q) + " outside the register");
    for (const auto &b : a.blocks)
        for (int q : b)
            if (q < 1 || q > n)
                throw Error("abstract state mentions q" + std::to_string(q) +
                            " outside the register");
    for (int q : a.pure)
        if (!is_base_state(s, q, tol))
            return false;
    auto partition = entanglement_relation(s, tol);
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            if (!a.related(x, y) && partition.related(x, y))
                return false;
    return true;
}

std::string to_text(const AQS &a) {
    std::ostringstream os;
    for (const auto &b : a.blocks) {
        os << "block:";
        for (int q : b)
            os << " q" << q;
        os << "\n";
    }
    os << "pure:";
    for (int q : a.pure)
        os << " q" << q;
    os << "\n";
    return os.str();
}

AQS parse_aqs(std::string_view text) {
    AQS a;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head))
            continue;
        bool is_block = head == "block:";
        if (!is_block && head != "pure:")
            throw SyntaxError("expected 'block:' or 'pure:'", lineno, 1);
        QubitSet qs;
        std::string tok;
        while (ls >> tok) {
            if (tok.size() < 2 || tok[0] != 'q' ||
                !std::all_of(tok.begin() + 1, tok.end(), ::isdigit))
                throw SyntaxError("expected a qubit name, found '" + tok + "'", lineno, 1);
            int q = std::stoi(tok.substr(1));
            if (q < 1)
                throw SyntaxError("qubit index must be at least 1", lineno, 1);
            qs.push_back(q);
        }
        if (is_block)
            a.blocks.push_back(std::move(qs));
        else
            a.pure.insert(a.pure.end(), qs.begin(), qs.end());
    }
    a.normalize();
    return a;
}

std::vector<AQS> enumerate_aqs(int n) {
    std::vector<AQS> out;
    // each qubit is either pure, outside everything, or in some block
    std::vector<int> label(n + 1, 0); // 0 = free, 1 = pure, 2 + k = block k
    std::function<void(int, int)> rec = [&](int q, int used_blocks) {
        if (q > n) {
            AQS a;
            a.blocks.assign(used_blocks, {});
            for (int x = 1; x <= n; ++x) {
                if (label[x] == 1)
                    a.pure.push_back(x);
                else if (label[x] >= 2)
                    a.blocks[label[x] - 2].push_back(x);
            }
            for (const auto &b : a.blocks)
                if (b.size() < 2)
                    return;
            a.normalize();
            out.push_back(std::move(a));
            return;
        }
        for (int l = 0; l < 2 + used_blocks + 1; ++l) {
            label[q] = l;
            rec(q + 1, std::max(used_blocks, l - 1));
        }
    };
    rec(1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace lq

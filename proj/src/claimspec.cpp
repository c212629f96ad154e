#include "qdiamond/claimspec.hpp"

#include <cctype>
#include <chrono>
#include <ctime>

#include <json.hpp>

namespace qdiamond {

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool try_literal(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_literal(char c, const char* what) {
        if (!try_literal(c)) fail(std::string("expected '") + c + "' " + what);
    }

    // Accepts a keyword such as "mod" (letters only, case-sensitive).
    void expect_word(const std::string& word) {
        skip_ws();
        if (text_.compare(pos_, word.size(), word) == 0) {
            pos_ += word.size();
            return;
        }
        fail("expected '" + word + "'");
    }

    std::uint64_t expect_integer(const char* what) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail(std::string("expected an integer ") + what);
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > (UINT64_MAX - digit) / 10) fail("integer literal overflows");
            v = v * 10 + digit;
            ++pos_;
        }
        return v;
    }

    void expect_end() {
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input after claim");
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ClaimParseError(message, pos_);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

CongruenceClaim parse_claim(const std::string& text) {
    Cursor cur(text);
    CongruenceClaim claim;

    cur.expect_word("d");
    cur.expect_literal('[', "to open the k expression");
    const std::uint64_t first = cur.expect_integer("in the k expression");
    if (cur.try_literal('j')) {
        claim.k_step = first;
        cur.expect_literal('+', "after j");
        claim.k_base = cur.expect_integer("for the k offset");
    } else {
        claim.k_step = 0;
        claim.k_base = first;
        if (claim.k_base == 0) cur.fail("single k must be >= 1");
    }
    cur.expect_literal(']', "to close the k expression");

    cur.expect_literal('(', "to open the progression");
    claim.progression.step = cur.expect_integer("for the progression step");
    cur.expect_word("n");
    if (cur.try_literal('+'))
        claim.progression.offset = cur.expect_integer("for the progression offset");
    else
        claim.progression.offset = 0;
    cur.expect_literal(')', "to close the progression");
    if (claim.progression.step == 0 || claim.progression.offset >= claim.progression.step)
        cur.fail("progression needs 0 <= B < A");

    cur.expect_literal('=', "before 0");
    const std::uint64_t zero = cur.expect_integer("(the literal 0)");
    if (zero != 0) cur.fail("claims assert congruence to 0");
    cur.expect_word("mod");
    claim.modulus = cur.expect_integer("for the modulus");
    if (claim.modulus < 2) cur.fail("modulus must be >= 2");
    cur.expect_end();
    return claim;
}

std::string ledger_record(const CheckReport& report, const std::string& command,
                          const std::string& timestamp) {
    nlohmann::json j;
    j["schema"] = 1;
    j["ts"] = timestamp;
    j["command"] = command;
    j["claim"] = {{"k_step", report.claim.k_step},
                  {"k_base", report.claim.k_base},
                  {"step", report.claim.progression.step},
                  {"offset", report.claim.progression.offset},
                  {"modulus", report.claim.modulus},
                  {"text", report.claim.describe()}};
    j["n_max"] = report.n_max;
    j["j_max"] = report.j_max;
    j["verified"] = report.verified;
    if (report.first_failure) {
        j["first_failure"] = {{"j", report.first_failure->j},
                              {"n", report.first_failure->n},
                              {"residue", report.first_failure->residue}};
    } else {
        j["first_failure"] = nullptr;
    }
    return j.dump();
}

std::string now_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace qdiamond

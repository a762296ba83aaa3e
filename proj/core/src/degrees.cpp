#include "spinblocks/degrees.hpp"

#include <bit>
#include <map>
#include <stdexcept>
#include <string>

namespace spinblocks {

ExactInteger factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    ExactInteger out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

int val2_factorial(int n) {
    if (n < 0) throw std::invalid_argument("val2_factorial of a negative number");
    return n - std::popcount(static_cast<unsigned>(n));
}

int val2(const ExactInteger& x) {
    if (x == 0) throw std::invalid_argument("2-adic valuation of zero is undefined");
    return static_cast<int>(mpz_scan1(x.get_mpz_t(), 0));
}

ExactInteger hook_degree(const Partition& lambda) {
    ExactInteger product = 1;
    for (int h : hook_lengths(lambda)) product *= h;
    const ExactInteger total = factorial(lambda.size());
    if (!mpz_divisible_p(total.get_mpz_t(), product.get_mpz_t())) {
        throw std::logic_error("hook product does not divide n! for " + lambda.to_string());
    }
    ExactInteger out = total / product;
    return out;
}

namespace {

ExactInteger count_tableaux(std::vector<int>& rows, std::map<std::vector<int>, ExactInteger>& memo) {
    if (rows.empty()) return 1;
    if (auto it = memo.find(rows); it != memo.end()) return it->second;
    ExactInteger total = 0;
    // The largest entry sits in some corner; remove it and recurse.
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const bool corner = r + 1 == rows.size() || rows[r + 1] < rows[r];
        if (!corner) continue;
        --rows[r];
        const bool emptied = rows[r] == 0;
        if (emptied) rows.pop_back();
        total += count_tableaux(rows, memo);
        if (emptied) rows.push_back(0);
        ++rows[r];
    }
    memo.emplace(rows, total);
    return total;
}

}  // namespace

ExactInteger syt_count(const Partition& lambda) {
    if (lambda.size() > config::syt_cap) {
        throw std::domain_error("syt_count is capped at n = " + std::to_string(config::syt_cap));
    }
    std::vector<int> rows = lambda.parts();
    std::map<std::vector<int>, ExactInteger> memo;
    return count_tableaux(rows, memo);
}

ExactInteger spin_degree(const BarPartition& mu) {
    if (mu.empty()) throw std::invalid_argument("spin_degree needs a non-empty bar partition");
    const auto& parts = mu.parts();
    const int n = mu.size();
    const int m = mu.length();

    ExactInteger numerator = factorial(n);
    ExactInteger denominator = 1;
    numerator <<= static_cast<mp_bitcnt_t>((n - m) / 2);
    for (int a : parts) denominator *= factorial(a);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            numerator *= parts[i] - parts[j];
            denominator *= parts[i] + parts[j];
        }
    }
    mpq_class degree(numerator, denominator);
    degree.canonicalize();
    if (degree.get_den() != 1 || degree.get_num() <= 0) {
        throw std::logic_error("spin degree is not a positive integer for " + mu.to_string());
    }
    return degree.get_num();
}

}  // namespace spinblocks

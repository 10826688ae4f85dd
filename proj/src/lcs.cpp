#include "lcs.hpp"

#include <algorithm>

namespace hp {

LcsWitness lcs(std::string_view S, std::string_view T) {
    size_t n = S.size(), m = T.size();
    std::vector<std::vector<int64_t>> dp(n + 1, std::vector<int64_t>(m + 1, 0));
    for (size_t i = 1; i <= n; ++i)
        for (size_t j = 1; j <= m; ++j)
            dp[i][j] = (S[i - 1] == T[j - 1]) ? dp[i - 1][j - 1] + 1
                                              : std::max(dp[i - 1][j], dp[i][j - 1]);
    LcsWitness w;
    w.length = dp[n][m];
    size_t i = n, j = m;
    while (i > 0 && j > 0) {
        if (S[i - 1] == T[j - 1] && dp[i][j] == dp[i - 1][j - 1] + 1) {
            w.pairs.emplace_back(static_cast<int64_t>(i), static_cast<int64_t>(j));
            --i; --j;
        } else if (dp[i - 1][j] >= dp[i][j - 1]) {
            --i;  // prefer advancing in S
        } else {
            --j;
        }
    }
    std::reverse(w.pairs.begin(), w.pairs.end());
    return w;
}

}  // namespace hp

/**
 * @file painting.hpp
 * @brief The on-line DP-painting game: Painter's certificate-driven strategy,
 *        scripted Lister adversaries, and replayable transcripts.
 */
#ifndef WDEG_PAINTING_HPP
#define WDEG_PAINTING_HPP

#include "wdeg/dp_coloring.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace wdeg {

struct GameState {
    VertexSet present;
    /// Sum of list sizes offered to each vertex in earlier rounds.
    std::vector<int> used;
    /// The paintability budget g.
    WeightFn budget;
    int round = 0;
};

GameState initial_game_state(const Graph& g, const WeightFn& budget);

/// Lister's move is a cover of the whole graph whose lists are empty outside
/// the current graph and whose matchings only join present vertices.
using ListerMove = Cover;

struct PainterResponse {
    std::vector<Vertex> colored; ///< U_i, ascending
    std::vector<int> colors;     ///< phi_i, parallel to `colored`
};

struct PainterStep {
    PainterResponse response;
    /// Certificate for the next graph G[W_i] in its local ids (ascending
    /// parent order), with weights f_i - |L_i|.
    Certificate next;
};

/// One round of Painter's strategy. `cert` certifies G_i (local ids of the
/// subgraph induced by state.present) for f_i = budget - 1 - used.
PainterStep painter_strategy(const Graph& g, const GameState& state, const Certificate& cert,
                             const ListerMove& move);

class Lister
{
public:
    virtual ~Lister() = default;
    virtual std::string name() const = 0;
    virtual ListerMove next_move(const Graph& g, const GameState& state) = 0;
};

/// Each present vertex receives, with probability `intensity`, a list of
/// uniform size in 1..(budget - used); matchings are random partial matchings.
/// When no vertex is drawn, one uniformly chosen present vertex gets a list.
std::unique_ptr<Lister> random_lister(std::uint64_t seed, double intensity);
/// Round 0: lists {0..k-1} on every vertex with random perfect matchings;
/// empty lists afterwards.
std::unique_ptr<Lister> full_assignment_lister(int k, std::uint64_t seed);
/// Round 0 plays the given cover; empty lists afterwards.
std::unique_ptr<Lister> full_assignment_lister(Cover cover);
/// Lists of size at most one: the vertex of rank r in `order` is offered {0}
/// in round i iff r + i is even; identity matchings.
std::unique_ptr<Lister> singleton_stream_lister(std::vector<Vertex> order);

enum class Winner { Painter, Lister };

struct RoundRecord {
    ListerMove move;
    PainterResponse response;
};

struct Transcript {
    WeightFn budget;
    std::vector<RoundRecord> rounds;
    Winner winner = Winner::Painter;
    /// True when the round guard ended the game rather than an empty graph.
    bool stopped_by_guard = false;
};

struct GameOptions {
    /// 0 selects the default sum of budgets plus one.
    int max_rounds = 0;
};

/// Plays Painter (driven by `cert`, a verified certificate for budget - 1)
/// against `lister`. A loss with a valid certificate throws InvariantError.
Transcript play_game(const Graph& g, const WeightFn& budget, const Certificate& cert,
                     Lister& lister, const GameOptions& opt = {});

struct TranscriptCheck {
    bool ok = true;
    int failed_round = -1;
    std::string reason;
};

/// Replays a transcript: every move well-formed, every response satisfies the
/// coloring conditions, and the recorded winner follows from the loss rule.
TranscriptCheck verify_transcript(const Graph& g, const Transcript& t);

std::string dump_transcript(const Transcript& t);
Transcript parse_transcript(const std::string& text);

} // namespace wdeg

#endif

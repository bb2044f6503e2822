#ifndef GRIDPATHS_H
#define GRIDPATHS_H

/* C interface to the gridpaths library: grid-based EPG/VPG representations
 * of graphs, their constructions, validators and bound checks.
 *
 * All artifacts cross the boundary as the library's line-oriented text
 * formats. Strings returned through char** outputs are heap-allocated and
 * must be released with gp_string_free. On any non-GP_OK status,
 * gp_last_error() describes the failure.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gp_graph gp_graph;
typedef struct gp_rep gp_rep;

typedef enum {
    GP_OK = 0,
    GP_ERR_PARSE = 1,    /* malformed input text */
    GP_ERR_INVALID = 2,  /* precondition or semantic failure */
    GP_ERR_INTERNAL = 3  /* broken internal invariant */
} gp_status;

/* Message of the most recent failure on this thread. Never NULL. */
const char* gp_last_error(void);
void gp_string_free(char* s);

/* Graph files: "n m" header plus edge lines "u v", 0-based ids, u < v. */
gp_status gp_graph_parse(const char* text, gp_graph** out);
char* gp_graph_serialize(const gp_graph* g);
void gp_graph_free(gp_graph* g);

/* Representation files: "v : x1,y1 x2,y2 ..." per vertex, optional "closed".
 * mode is one of "epg", "vpg", "proper-vpg". */
gp_status gp_rep_parse(const char* text, const char* mode, gp_rep** out);
char* gp_rep_serialize(const gp_rep* rep);
void gp_rep_free(gp_rep* rep);

/* xy+ EPG of an arbitrary graph in a 3n x 2n box. */
gp_status gp_construct_complete(const gp_graph* g, gp_rep** out);

/* xy+ EPG of g through an interval supergraph, height <= 8k+8 and width
 * <= 4n+4k+4. source_text is an interval file ("v l r" lines), or a
 * path-decomposition file (bag per line) when is_decomposition != 0.
 * Interval endpoints are normalized before use. */
gp_status gp_construct_pathwidth(const gp_graph* g, const char* source_text,
                                 int is_decomposition, gp_rep** out);

/* EPG of a minor of g, traced from an orthogonal drawing, in a 2w x 2h box.
 * drawing_text uses the "vertices"/"edges" sections; recipe_text lists
 * delete-vertex/delete-edge/contract lines (NULL for the empty recipe).
 * With open_paths == 0 the paths stay closed curves. */
gp_status gp_construct_orthogonal(const gp_graph* g, const char* drawing_text,
                                  const char* recipe_text, int open_paths,
                                  gp_rep** out);

/* The minor of g described by recipe_text, as a graph file. */
gp_status gp_apply_minor(const gp_graph* g, const char* recipe_text, gp_graph** out);

/* Exact validation of rep against g under rep's mode. *exact is 1 or 0;
 * *report_out (optional) receives the report, JSON when json != 0. */
gp_status gp_validate(const gp_rep* rep, const gp_graph* g, int json, int* exact,
                      char** report_out);

/* Representation statistics, plus the bound reports when with_bounds != 0.
 * g may be NULL; graph-dependent bounds are then skipped. */
gp_status gp_analyze(const gp_rep* rep, const gp_graph* g, int with_bounds, int json,
                     char** out);

/* Deterministic SVG figure. cell is pixels per grid unit (>= 4). */
gp_status gp_render_svg(const gp_rep* rep, int cell, int labels, char** out);

#ifdef __cplusplus
}
#endif

#endif /* GRIDPATHS_H */

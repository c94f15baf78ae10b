#ifndef ORBITCALC_H
#define ORBITCALC_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes; nonzero values match the CLI exit codes.
typedef enum OcStatus {
  OC_STATUS_OK = 0,
  // A pointer argument was null or a command name was invalid.
  OC_STATUS_INVALID_ARGUMENT = 1,
  OC_STATUS_PARSE = 2,
  OC_STATUS_DATA = 3,
  OC_STATUS_UNSUPPORTED = 4,
  OC_STATUS_INTERNAL = 5,
} OcStatus;

// Opaque parsed document.
typedef struct OcDocument OcDocument;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the most recent failure on this thread, or null. The pointer
// stays valid until the next failing call on the same thread.
const char *oc_last_error(void);

// Library version as a static string; do not free.
const char *oc_version(void);

// Parse a document from `len` bytes at `text`. On success stores a handle
// in `out`.
//
// # Safety
// `text` must point to `len` readable bytes and `out` to a writable
// pointer slot.
enum OcStatus oc_document_parse(const char *text, size_t len, struct OcDocument **out);

// Free a document handle. Null is allowed.
//
// # Safety
// `doc` must be a handle from [`oc_document_parse`], not yet freed.
void oc_document_free(struct OcDocument *doc);

// Document kind as a static string ("orbitspace4", "seifert3", "matrix"
// or "config"); do not free.
//
// # Safety
// `doc` must be a live handle from [`oc_document_parse`].
const char *oc_document_kind(const struct OcDocument *doc);

// Canonical text form of a document. Free the result with
// [`oc_string_free`].
//
// # Safety
// `doc` must be a live handle and `out` a writable pointer slot.
enum OcStatus oc_document_serialize(const struct OcDocument *doc, char **out);

// Run a command ("validate", "classify3", "classify4", "plumb", "reduce")
// on a document; the JSON report is stored in `out_json` and freed with
// [`oc_string_free`]. Pass `trace` nonzero to include reduction steps.
//
// # Safety
// `command` must be a NUL-terminated string, `doc` a live handle, and
// `out_json` a writable pointer slot.
enum OcStatus oc_run_json(const struct OcDocument *doc,
                          const char *command,
                          bool trace,
                          char **out_json);

// Enumerate the single-segment arc cases up to `k_max`; the JSON report
// is stored in `out_json` and freed with [`oc_string_free`].
//
// # Safety
// `out_json` must be a writable pointer slot.
enum OcStatus oc_enumerate_json(int64_t k_max, char **out_json);

// Free a string returned by this library. Null is allowed.
//
// # Safety
// `s` must come from this library and not have been freed.
void oc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORBITCALC_H */

#ifndef VBPB_H
#define VBPB_H

////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  This file is part of vbpb.                                                //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////

// C interface to the VB-groupoid frame bundle library. Handles are opaque.
// Every function returning int returns a vbpb_status; on failure the message
// is available from vbpb_last_error() on the calling thread until the next
// call into the library. Strings handed out through char** must be released
// with vbpb_string_free.

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define VBPB_API __declspec(dllexport)
#else
#  define VBPB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct vbpb_vbg vbpb_vbg;
typedef struct vbpb_report vbpb_report;

enum vbpb_status {
  VBPB_OK = 0,
  VBPB_E_PARSE = 1,       // spec file syntax or structure
  VBPB_E_VALIDATION = 2,  // structure maps violate an axiom
  VBPB_E_IO = 3,
  VBPB_E_ARGUMENT = 4,    // bad argument from the caller
  VBPB_E_MATH = 5,        // singular matrix, no unique solution, ...
  VBPB_E_INTERNAL = 6
};

enum vbpb_format { VBPB_FORMAT_TEXT = 0, VBPB_FORMAT_MACHINE = 1 };

VBPB_API const char* vbpb_version(void);
VBPB_API const char* vbpb_last_error(void);
VBPB_API const char* vbpb_status_name(int status);
VBPB_API void vbpb_string_free(char* s);

// Loading validates; a failing file yields VBPB_E_VALIDATION with the
// violations joined by "; ".
VBPB_API int vbpb_load(const char* path, vbpb_vbg** out);
VBPB_API int vbpb_parse(const char* text, size_t len, vbpb_vbg** out);
VBPB_API int vbpb_save(const vbpb_vbg* v, const char* path);
VBPB_API int vbpb_to_string(const vbpb_vbg* v, char** out);
VBPB_API void vbpb_free(vbpb_vbg* v);

VBPB_API int vbpb_dims(const vbpb_vbg* v, size_t* l, size_t* k, size_t* n_objects, size_t* n_arrows);
// Number of violations found by re-running the validator; 0 means valid.
VBPB_API int vbpb_validate(const vbpb_vbg* v, size_t* n_problems, char** problems);
VBPB_API int vbpb_dual(const vbpb_vbg* v, vbpb_vbg** out);

// Per-object core: basis of ker S at the unit and the core anchor.
VBPB_API int vbpb_describe_core(const vbpb_vbg* v, char** out);
// Tab-separated listing of sampled s-bisection frames and base pairs.
VBPB_API int vbpb_describe_frames(const vbpb_vbg* v, uint64_t seed, size_t per_arrow, char** out);

// suite is one of groupoid, gl2, action, duality, roundtrip, all.
VBPB_API int vbpb_check(const vbpb_vbg* v, const char* suite, const char* instance, uint64_t seed, long trials,
                        vbpb_report** out);
VBPB_API int vbpb_report_counts(const vbpb_report* r, long* total, long* failed);
VBPB_API int vbpb_report_emit(const vbpb_report* r, int format, char** out);
VBPB_API void vbpb_report_free(vbpb_report* r);

#ifdef __cplusplus
}
#endif

#endif

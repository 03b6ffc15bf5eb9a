/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_preview_free: (a: number, b: number) => void;
export const explicitWarp: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
export const originalScene: (a: number, b: number) => [number, number, number];
export const preview_paramsJson: (a: number) => [number, number];
export const preview_rgba: (a: number) => [number, number];
export const preview_side: () => number;
export const randomAugment: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number, j: number) => [number, number, number];
export const speckleHistogram: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;

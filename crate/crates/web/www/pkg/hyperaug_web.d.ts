/* tslint:disable */
/* eslint-disable */

/**
 * An augmented copy of the scene together with the parameters used.
 */
export class Preview {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    paramsJson(): string;
    /**
     * RGBA bytes, row-major, `side × side × 4`.
     */
    rgba(): Uint8Array;
    static side(): number;
}

/**
 * Warps the scene with explicit parameters (no flips, no noise).
 */
export function explicitWarp(angle: number, dx: number, dy: number, zoom: number, shear: number, bands: Uint32Array): Preview;

/**
 * The unmodified scene.
 */
export function originalScene(bands: Uint32Array): Preview;

/**
 * Draws parameters from the given ranges under `seed` and augments the scene.
 */
export function randomAugment(seed: number, flip_h: boolean, flip_v: boolean, rotation: number, translation: number, zoom: number, shear: number, speckle_variance: number, bands: Uint32Array): Preview;

/**
 * Counts of `out - 1` over `samples` noisy copies of a constant 1.0 pixel,
 * in `bins` equal bins spanning ±4 standard deviations. The last two
 * entries are the sample mean and variance.
 */
export function speckleHistogram(variance: number, seed: number, samples: number, bins: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_preview_free: (a: number, b: number) => void;
    readonly explicitWarp: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
    readonly originalScene: (a: number, b: number) => [number, number, number];
    readonly preview_paramsJson: (a: number) => [number, number];
    readonly preview_rgba: (a: number) => [number, number];
    readonly preview_side: () => number;
    readonly randomAugment: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number, j: number) => [number, number, number];
    readonly speckleHistogram: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;

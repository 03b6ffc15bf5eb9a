import init, { originalScene, randomAugment, explicitWarp, speckleHistogram, Preview } from "./pkg/hyperaug_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function bands() {
  return new Uint32Array(["band-r", "band-g", "band-b"].map(num));
}

function paint(canvas, preview) {
  const side = Preview.side();
  const pixels = new ImageData(new Uint8ClampedArray(preview.rgba()), side, side);
  canvas.getContext("2d").putImageData(pixels, 0, 0);
}

function guarded(fn) {
  return () => {
    try {
      $("error").textContent = "";
      fn();
    } catch (e) {
      $("error").textContent = String(e);
    }
  };
}

const drawOriginal = guarded(() => paint($("original"), originalScene(bands())));

const drawRandom = guarded(() => {
  const p = randomAugment(
    num("seed"), $("flip-h").checked, $("flip-v").checked,
    num("rotation"), num("translation"), num("zoom"), num("shear"), num("speckle"),
    bands(),
  );
  paint($("random"), p);
  $("params").textContent = p.paramsJson();
});

const drawWarp = guarded(() => {
  for (const input of document.querySelectorAll("input[type=range]")) {
    input.nextElementSibling.textContent = input.value;
  }
  paint($("warped"), explicitWarp(num("w-angle"), num("w-dx"), num("w-dy"), num("w-zoom"), num("w-shear"), bands()));
});

const drawHistogram = guarded(() => {
  const bins = 60;
  const variance = num("h-variance");
  const h = speckleHistogram(variance, 7, 200000, bins);
  const canvas = $("hist");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const peak = Math.max(...h.slice(0, bins));
  const w = canvas.width / bins;
  ctx.fillStyle = "#3a6ea5";
  for (let i = 0; i < bins; i++) {
    const barHeight = (h[i] / peak) * (canvas.height - 10);
    ctx.fillRect(i * w, canvas.height - barHeight, w - 1, barHeight);
  }
  const sigma = Math.sqrt(variance);
  $("moments").textContent =
    `range ±${(4 * sigma).toFixed(3)}; mean ${h[bins].toFixed(5)}, variance ${h[bins + 1].toFixed(5)}`;
});

function redrawAll() {
  drawOriginal();
  drawRandom();
  drawWarp();
}

await init();
$("draw").addEventListener("click", () => {
  $("seed").value = num("seed") + 1;
  drawRandom();
});
$("false-color").addEventListener("click", () => {
  [$("band-r").value, $("band-g").value, $("band-b").value] = [7, 3, 2];
  redrawAll();
});
for (const id of ["band-r", "band-g", "band-b"]) $(id).addEventListener("change", redrawAll);
for (const input of document.querySelectorAll("input[type=range]")) input.addEventListener("input", drawWarp);
$("histogram").addEventListener("click", drawHistogram);
redrawAll();
drawHistogram();

// View-mode presets as pure math over the scene bounds, so the drawing
// layer only has to copy the result onto a three.js camera.

export type ViewMode = 'GROUND' | 'AERIAL' | 'TOPDOWN'

export const GROUND_EYE_HEIGHT = 1.6
export const AERIAL_ELEVATION_DEG = 45
export const MODE_SWITCH_SECONDS = 0.5

export interface CameraPose {
  position: [number, number, number]
  target: [number, number, number]
  pitchDeg: number // rotation below the horizon; -90 is straight down
}

export interface Frustum {
  fovYDeg: number
  aspect: number
}

function center(bounds: { width: number; depth: number }): [number, number, number] {
  return [bounds.width / 2, 0, bounds.depth / 2]
}

/** Distance at which a sphere of the given radius fits both frustum axes. */
export function fitDistance(radius: number, frustum: Frustum): number {
  const vHalf = (frustum.fovYDeg * Math.PI) / 360
  const hHalf = Math.atan(Math.tan(vHalf) * frustum.aspect)
  return radius / Math.sin(Math.min(vHalf, hHalf))
}

export function cameraPose(
  mode: ViewMode,
  bounds: { width: number; depth: number },
  frustum: Frustum,
): CameraPose {
  const mid = center(bounds)
  const radius = Math.hypot(bounds.width / 2, bounds.depth / 2)
  switch (mode) {
    case 'GROUND':
      return {
        position: [mid[0], GROUND_EYE_HEIGHT, bounds.depth + 2],
        target: [mid[0], GROUND_EYE_HEIGHT, mid[2]],
        pitchDeg: 0,
      }
    case 'AERIAL': {
      const distance = fitDistance(radius, frustum)
      const elev = (AERIAL_ELEVATION_DEG * Math.PI) / 180
      return {
        position: [
          mid[0],
          distance * Math.sin(elev),
          mid[2] + distance * Math.cos(elev),
        ],
        target: mid,
        pitchDeg: -AERIAL_ELEVATION_DEG,
      }
    }
    case 'TOPDOWN': {
      const height = fitDistance(radius, frustum)
      return {
        position: [mid[0], height, mid[2]],
        target: mid,
        pitchDeg: -90,
      }
    }
  }
}

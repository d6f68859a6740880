// Render-free transition math: smoothstep easing over per-entity steps
// with staggered delays. The render loop feeds elapsed seconds in and
// reads interpolated positions out.

import { TransitionPlan } from './types'

export type Vec3 = [number, number, number]

export function smoothstep(t: number): number {
  return 3 * t * t - 2 * t * t * t
}

export function positionAt(
  start: Vec3,
  end: Vec3,
  delay: number,
  duration: number,
  t: number,
): Vec3 {
  if (t <= delay) return [...start]
  const u = (t - delay) / duration
  if (u >= 1) return [...end]
  const s = smoothstep(u)
  return [
    start[0] + s * (end[0] - start[0]),
    start[1] + s * (end[1] - start[1]),
    start[2] + s * (end[2] - start[2]),
  ]
}

export function planDuration(plan: TransitionPlan): number {
  let total = 0
  for (const step of Object.values(plan.steps)) {
    total = Math.max(total, step.delay + step.duration)
  }
  return total
}

/** Runs one TransitionPlan against a mutable position map. */
export class Animator {
  private elapsed = 0
  private readonly total: number

  constructor(private readonly plan: TransitionPlan) {
    this.total = planDuration(plan)
  }

  /** Advance by dt seconds; returns the positions at the new time. */
  tick(dt: number): Map<string, Vec3> {
    this.elapsed += dt
    return this.sample(this.elapsed)
  }

  sample(t: number): Map<string, Vec3> {
    const out = new Map<string, Vec3>()
    for (const [id, step] of Object.entries(this.plan.steps)) {
      out.set(id, positionAt(step.start, step.end, step.delay, step.duration, t))
    }
    return out
  }

  get done(): boolean {
    return this.elapsed >= this.total
  }

  /** Exact end positions; applied on completion so nothing drifts. */
  endPositions(): Map<string, Vec3> {
    const out = new Map<string, Vec3>()
    for (const [id, step] of Object.entries(this.plan.steps)) {
      out.set(id, [...step.end])
    }
    return out
  }
}

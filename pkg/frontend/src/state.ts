// Client state and the render-free halves of every interaction. The
// drawing layer subscribes to this and mirrors positions onto meshes.

import { Animator, Vec3 } from './animation'
import { GardenApi, ApiError } from './api'
import { ViewMode } from './camera'
import { SceneDocument, TransitionPlan } from './types'

export interface ClientState {
  scene: SceneDocument
  positions: Map<string, Vec3>
  mode: ViewMode
  legendVisible: boolean
  selectedId: string | null
  animator: Animator | null
}

export function initialState(scene: SceneDocument): ClientState {
  const positions = new Map<string, Vec3>()
  for (const entity of scene.entities) {
    positions.set(entity.id, [...entity.position])
  }
  return {
    scene,
    positions,
    mode: 'GROUND',
    legendVisible: false,
    selectedId: null,
    animator: null,
  }
}

export async function loadState(api: GardenApi): Promise<ClientState> {
  return initialState(await api.scene())
}

export function setViewMode(state: ClientState, mode: ViewMode): void {
  state.mode = mode
}

export function toggleLegend(state: ClientState): void {
  state.legendVisible = !state.legendVisible
}

export function selectEntity(state: ClientState, id: string | null): void {
  if (id !== null && !state.positions.has(id)) return
  state.selectedId = id
}

/** Questions offered in the grouping menu: those any entity answered. */
export function groupableQuestions(state: ClientState): string[] {
  const seen = new Set<string>()
  for (const entry of state.scene.legend.entries) {
    seen.add(entry.question)
  }
  return [...seen]
}

function startTransition(state: ClientState, plan: TransitionPlan): void {
  state.animator = new Animator(plan)
}

/**
 * Request a grouped layout and start animating toward it. The server's
 * transition starts are the scene file's positions; we substitute the
 * client's current positions so the animation begins where things are.
 */
export async function triggerGrouping(
  state: ClientState,
  api: GardenApi,
  question: string,
): Promise<void> {
  const response = await api.layout({ mode: 'grouped', group_by: question })
  const plan = response.transition
  for (const [id, step] of Object.entries(plan.steps)) {
    const current = state.positions.get(id)
    if (current) step.start = [...current]
  }
  startTransition(state, plan)
}

/** Animate back to the scene document's original positions. */
export function resetLayout(
  state: ClientState,
  duration = 1.5,
  stagger = 0.01,
): void {
  const ids = [...state.positions.keys()].sort()
  const original = new Map(
    state.scene.entities.map((e) => [e.id, e.position] as const),
  )
  const steps: TransitionPlan['steps'] = {}
  ids.forEach((id, rank) => {
    steps[id] = {
      start: [...state.positions.get(id)!],
      end: [...original.get(id)!],
      delay: stagger * rank,
      duration,
    }
  })
  startTransition(state, { easing: 'smoothstep', steps })
}

/** Advance the running transition; returns true while animating. */
export function tick(state: ClientState, dt: number): boolean {
  const animator = state.animator
  if (!animator) return false
  const sampled = animator.tick(dt)
  for (const [id, pos] of sampled) {
    state.positions.set(id, pos)
  }
  if (animator.done) {
    for (const [id, pos] of animator.endPositions()) {
      state.positions.set(id, pos)
    }
    state.animator = null
    return false
  }
  return true
}

export function isRecoverable(error: unknown): boolean {
  return error instanceof ApiError
}

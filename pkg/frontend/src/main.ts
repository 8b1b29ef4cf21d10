/** Browser entry point. Configuration comes from the URL:
 *   index.html?base=http://127.0.0.1:8100&batch=b1&annotator=a1&token=...
 */

import { ServiceClient } from "./api.js";
import { mount } from "./dom.js";
import { AnnotationSession } from "./session.js";

function required(params: URLSearchParams, name: string): string {
  const value = params.get(name);
  if (!value) {
    throw new Error(`missing required URL parameter: ${name}`);
  }
  return value;
}

const params = new URLSearchParams(window.location.search);
const annotatorId = required(params, "annotator");
const client = new ServiceClient({
  baseUrl: required(params, "base"),
  batchId: required(params, "batch"),
  annotatorId,
  token: required(params, "token"),
});

const container = document.getElementById("app");
if (!container) {
  throw new Error("missing #app container");
}
mount(container, new AnnotationSession(client, annotatorId));

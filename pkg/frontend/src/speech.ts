// Browser-native speech capture with a textarea fallback. The pipeline
// expects a raw lowercase stream, so the recognized text is lowercased.

export function isSpeechSupported(w: Window = window): boolean {
  // @ts-ignore vendor-prefixed API
  return !!(w.SpeechRecognition || w.webkitSpeechRecognition);
}

export function captureSpeech(w: Window = window): Promise<string> {
  return new Promise((resolve, reject) => {
    // @ts-ignore vendor-prefixed API
    const SR = w.SpeechRecognition || w.webkitSpeechRecognition;
    if (!SR) {
      reject(new Error("speech recognition not supported"));
      return;
    }
    const recognition = new SR();
    recognition.lang = "en-US";
    recognition.continuous = false;
    recognition.interimResults = false;
    recognition.maxAlternatives = 1;
    recognition.onresult = (event: any) => {
      const text = event.results?.[0]?.[0]?.transcript ?? "";
      resolve(String(text).toLowerCase());
    };
    recognition.onerror = (event: any) => reject(new Error(event.error ?? "speech error"));
    recognition.start();
  });
}
